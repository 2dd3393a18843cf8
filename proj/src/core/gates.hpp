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

#ifndef QCP_CORE_GATES_HPP
#define QCP_CORE_GATES_HPP

#include <Eigen/Dense>

#include "model.hpp"

namespace qcp {

// Bond term of the contact-process Hamiltonian on two neighboring sites,
// h = sigma^x (x) n + n (x) sigma^x, with the left site as the slow index.
Eigen::Matrix4d bond_term();

// exp(-i * omega * dt * h); exact to eigensolver precision, unitary.
Eigen::Matrix4cd two_site_gate(double omega, double dt);

// Applies a two-site gate to sites (k, k+1), 1-based, of a dense state.
void apply_two_site_gate_dense(DenseState& state, uint32_t n_sites, uint32_t k,
                               const Eigen::Matrix4cd& gate);

}  // namespace qcp

#endif
