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

#ifndef QCP_CORE_NOISE_HPP
#define QCP_CORE_NOISE_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace qcp {

// Addressable complex Wiener increments. Every (master_seed, trajectory_id,
// site, step) cell is an independent Philox evaluation, so the same tuple
// yields the same increment no matter the call order or thread count.
struct NoiseStream {
  uint64_t master_seed = 0;
  uint64_t trajectory_id = 0;
};

// d\xi = (x + i y)/sqrt(2) with x, y independent N(0, dt). This satisfies
//   E[d\xi] = 0,  E[d\xi^2] = 0,  E[|d\xi|^2] = dt.
std::complex<double> sample_increment(const NoiseStream& stream, uint32_t site,
                                      uint64_t step, double dt);

// One row of increments, sites 1..n (0-based in the result).
Eigen::VectorXcd sample_increment_row(const NoiseStream& stream,
                                      uint32_t n_sites, uint64_t step,
                                      double dt);

}  // namespace qcp

#endif
