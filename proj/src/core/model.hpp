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

#ifndef QCP_CORE_MODEL_HPP
#define QCP_CORE_MODEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qcp {

using Complex = std::complex<double>;
using SparseOperator = Eigen::SparseMatrix<Complex>;
using DenseState = Eigen::VectorXcd;

// Basis conventions, fixed project-wide:
//   single site:  index 0 = |active>, index 1 = |inactive>
//   many body:    site 1 is the most significant bit, so the all-active
//                 configuration is basis index 0 and the absorbing
//                 all-inactive configuration is index 2^N - 1.
struct ModelParams {
  uint32_t n_sites = 1;
  double omega = 0.0;   // coherent rate
  double gamma = 1.0;   // monitoring (decay) rate; the unit of time is 1/gamma
  double dt = 0.05;
  double t_max = 10.0;
  uint64_t seed = 0;

  // Throws ErrorCode::invalid_argument on violation.
  void validate() const;
  // round(t_max / dt); validate() guarantees this is exact to 1e-9 relative.
  uint64_t n_steps() const;
};

// Place value of site k (1-based) in the basis index.
inline uint64_t site_bit(uint32_t n_sites, uint32_t k) {
  return uint64_t(1) << (n_sites - k);
}
inline bool site_active(uint64_t basis_index, uint32_t n_sites, uint32_t k) {
  return (basis_index & site_bit(n_sites, k)) == 0;
}

// H = Omega * sum_{k=1}^{N-1} (sigma^x_k n_{k+1} + n_k sigma^x_{k+1}),
// open boundaries. Hermitian; annihilates the all-inactive state.
SparseOperator build_hamiltonian(const ModelParams& params);

// L_k = sqrt(gamma) sigma^-_k, one per site.
std::vector<SparseOperator> jump_operators(const ModelParams& params);

// S_k = <psi| n_k |psi> for every site. Requires |psi| normalized to 1e-8.
Eigen::VectorXd local_densities(const DenseState& state, uint32_t n_sites);

// <psi| L_k |psi> for a single 1-based site index.
Complex expect_jump(const DenseState& state, const ModelParams& params,
                    uint32_t k);
// All sites at once (one pass over the amplitudes).
Eigen::VectorXcd expect_jump_all(const DenseState& state,
                                 const ModelParams& params);

// H_eff |psi> with
//   H_eff = H + i sum_k (<Lk^d> Lk - 1/2 Lk^d Lk - 1/2 <Lk^d><Lk>),
// expectations taken on the input state.
DenseState apply_heff(const DenseState& state, const ModelParams& params,
                      const SparseOperator& hamiltonian);

// Throws if | ||psi|| - 1 | > tol.
void require_normalized(const DenseState& state, double tol = 1e-8);

}  // namespace qcp

#endif
