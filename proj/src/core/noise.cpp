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

#include "noise.hpp"

#include <cmath>

#include "errors.hpp"
#include "prng.hpp"

namespace qcp {

std::complex<double> sample_increment(const NoiseStream& stream, uint32_t site,
                                      uint64_t step, double dt) {
  if (!(dt > 0.0)) fail(ErrorCode::invalid_argument, "dt must be > 0");
  if (step > 0xFFFFFFFFull)
    fail(ErrorCode::invalid_argument, "step index exceeds the 32-bit counter");
  // counter = (trajectory_id, site | step); key = master_seed
  const uint64_t ctr_hi = (uint64_t(site) << 32) | (step & 0xFFFFFFFFull);
  const auto g = normal_pair(stream.master_seed, stream.trajectory_id, ctr_hi);
  const double scale = std::sqrt(0.5 * dt);
  return {scale * g[0], scale * g[1]};
}

Eigen::VectorXcd sample_increment_row(const NoiseStream& stream,
                                      uint32_t n_sites, uint64_t step,
                                      double dt) {
  Eigen::VectorXcd row(n_sites);
  for (uint32_t k = 1; k <= n_sites; ++k)
    row[k - 1] = sample_increment(stream, k, step, dt);
  return row;
}

}  // namespace qcp
