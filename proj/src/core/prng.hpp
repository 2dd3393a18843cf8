// Copyright 2026 The qcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCP_CORE_PRNG_HPP
#define QCP_CORE_PRNG_HPP

#include <array>
#include <cstdint>

namespace qcp {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// A 128-bit counter and 64-bit key map to 128 bits of output; any
// (key, counter) cell can be evaluated independently, which is what makes
// per-(trajectory, site, step) streams reproducible under arbitrary
// parallel schedules.
std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key);

// Two independent standard-normal variates from one Philox cell
// (Box-Muller over the 128-bit output).
std::array<double, 2> normal_pair(uint64_t key, uint64_t ctr_lo,
                                  uint64_t ctr_hi);

// Sequential convenience stream on top of Philox: `key` selects the stream,
// draws are indexed by an internal counter. Used wherever seeded scalar
// randomness is needed (weight init, shuffles, k-means restarts, bootstrap)
// so results do not depend on the standard library's distributions.
class Prng {
 public:
  explicit Prng(uint64_t key, uint64_t stream = 0)
      : key_(key), stream_(stream) {}

  uint64_t next_u64();
  double uniform01();                    // [0, 1)
  double normal();                       // standard normal
  uint64_t uniform_int(uint64_t bound);  // [0, bound), bound >= 1

 private:
  uint64_t key_;
  uint64_t stream_;
  uint64_t index_ = 0;
  bool have_normal_ = false;
  double spare_normal_ = 0.0;
};

// 64-bit mix (splitmix64 finalizer); used to derive sub-stream keys from a
// master seed plus a purpose tag.
uint64_t mix64(uint64_t x);
uint64_t derive_seed(uint64_t master, uint64_t tag);

}  // namespace qcp

#endif
