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

#include "gates.hpp"

#include <complex>

namespace qcp {

Eigen::Matrix4d bond_term() {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
  // |active,active> couples to |active,inactive> and |inactive,active>
  h(0, 1) = h(1, 0) = 1.0;
  h(0, 2) = h(2, 0) = 1.0;
  return h;
}

Eigen::Matrix4cd two_site_gate(double omega, double dt) {
  const Eigen::Matrix4d h = bond_term();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(h);
  const Eigen::Vector4d lam = eig.eigenvalues();
  const Eigen::Matrix4d v = eig.eigenvectors();
  Eigen::Vector4cd phase;
  for (int i = 0; i < 4; ++i)
    phase[i] = std::exp(std::complex<double>(0.0, -omega * dt * lam[i]));
  return v.cast<Complex>() * phase.asDiagonal() * v.transpose().cast<Complex>();
}

void apply_two_site_gate_dense(DenseState& state, uint32_t n_sites, uint32_t k,
                               const Eigen::Matrix4cd& gate) {
  const uint64_t dim = uint64_t(1) << n_sites;
  const uint64_t bit1 = site_bit(n_sites, k);
  const uint64_t bit2 = site_bit(n_sites, k + 1);
  for (uint64_t b = 0; b < dim; ++b) {
    if (b & (bit1 | bit2)) continue;  // enumerate blocks once
    const uint64_t idx[4] = {b, b | bit2, b | bit1, b | bit1 | bit2};
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v[i] = state[idx[i]];
    v = gate * v;
    for (int i = 0; i < 4; ++i) state[idx[i]] = v[i];
  }
}

}  // namespace qcp
