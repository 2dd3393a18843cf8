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

#include "model.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qcp {

void ModelParams::validate() const {
  if (n_sites == 0)
    fail(ErrorCode::invalid_argument, "n_sites must be >= 1");
  if (!(omega >= 0.0))
    fail(ErrorCode::invalid_argument, "omega must be >= 0");
  if (!(gamma > 0.0))
    fail(ErrorCode::invalid_argument, "gamma must be > 0");
  if (!(dt > 0.0))
    fail(ErrorCode::invalid_argument, "dt must be > 0");
  if (!(t_max > dt))
    fail(ErrorCode::invalid_argument, "t_max must exceed dt");
  const double steps = t_max / dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
    fail(ErrorCode::invalid_argument,
         "t_max/dt = " + std::to_string(steps) + " is not an integer");
}

uint64_t ModelParams::n_steps() const {
  return uint64_t(std::llround(t_max / dt));
}

SparseOperator build_hamiltonian(const ModelParams& params) {
  params.validate();
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  SparseOperator h(dim, dim);
  if (n == 1 || params.omega == 0.0) return h;  // empty sum

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(std::size_t(2 * (n - 1)) * (dim / 2));
  for (uint64_t b = 0; b < dim; ++b) {
    for (uint32_t k = 1; k < n; ++k) {
      // sigma^x_k n_{k+1}: flips site k when site k+1 is active
      if (site_active(b, n, k + 1))
        entries.emplace_back(b ^ site_bit(n, k), b, params.omega);
      // n_k sigma^x_{k+1}: flips site k+1 when site k is active
      if (site_active(b, n, k))
        entries.emplace_back(b ^ site_bit(n, k + 1), b, params.omega);
    }
  }
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

std::vector<SparseOperator> jump_operators(const ModelParams& params) {
  params.validate();
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  const double amp = std::sqrt(params.gamma);
  std::vector<SparseOperator> ops;
  ops.reserve(n);
  for (uint32_t k = 1; k <= n; ++k) {
    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(dim / 2);
    const uint64_t bit = site_bit(n, k);
    for (uint64_t b = 0; b < dim; ++b)
      if ((b & bit) == 0) entries.emplace_back(b | bit, b, amp);
    SparseOperator l(dim, dim);
    l.setFromTriplets(entries.begin(), entries.end());
    ops.push_back(std::move(l));
  }
  return ops;
}

void require_normalized(const DenseState& state, double tol) {
  const double norm = state.norm();
  if (std::abs(norm - 1.0) > tol)
    fail(ErrorCode::invalid_argument,
         "state is not normalized: ||psi|| = " + std::to_string(norm));
}

Eigen::VectorXd local_densities(const DenseState& state, uint32_t n_sites) {
  require_normalized(state);
  const uint64_t dim = uint64_t(1) << n_sites;
  if (uint64_t(state.size()) != dim)
    fail(ErrorCode::invalid_argument, "state dimension does not match n_sites");
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n_sites);
  for (uint64_t b = 0; b < dim; ++b) {
    const double w = std::norm(state[b]);
    if (w == 0.0) continue;
    for (uint32_t k = 1; k <= n_sites; ++k)
      if (site_active(b, n_sites, k)) s[k - 1] += w;
  }
  return s;
}

Complex expect_jump(const DenseState& state, const ModelParams& params,
                    uint32_t k) {
  require_normalized(state);
  if (k < 1 || k > params.n_sites)
    fail(ErrorCode::invalid_argument,
         "site index " + std::to_string(k) + " out of range");
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  const uint64_t bit = site_bit(n, k);
  Complex acc = 0.0;
  for (uint64_t b = 0; b < dim; ++b)
    if ((b & bit) == 0) acc += std::conj(state[b | bit]) * state[b];
  return std::sqrt(params.gamma) * acc;
}

Eigen::VectorXcd expect_jump_all(const DenseState& state,
                                 const ModelParams& params) {
  require_normalized(state);
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
  for (uint64_t b = 0; b < dim; ++b) {
    const Complex amp = state[b];
    if (amp == Complex(0.0)) continue;
    for (uint32_t k = 1; k <= n; ++k) {
      const uint64_t bit = site_bit(n, k);
      if ((b & bit) == 0) e[k - 1] += std::conj(state[b | bit]) * amp;
    }
  }
  return std::sqrt(params.gamma) * e;
}

DenseState apply_heff(const DenseState& state, const ModelParams& params,
                      const SparseOperator& hamiltonian) {
  require_normalized(state);
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  if (uint64_t(state.size()) != dim || hamiltonian.rows() != Eigen::Index(dim))
    fail(ErrorCode::invalid_argument, "dimension mismatch in apply_heff");

  const Eigen::VectorXcd e = expect_jump_all(state, params);
  const double sqrt_gamma = std::sqrt(params.gamma);

  DenseState out = hamiltonian * state;
  // i * sum_k ( <Lk^d> Lk - 1/2 Lk^d Lk - 1/2 |<Lk>|^2 ) |psi>
  Complex scalar = 0.0;
  for (uint32_t k = 1; k <= n; ++k) scalar += -0.5 * std::norm(e[k - 1]);
  const Complex i_unit(0.0, 1.0);
  out += i_unit * scalar * state;
  for (uint64_t b = 0; b < dim; ++b) {
    const Complex amp = state[b];
    if (amp == Complex(0.0)) continue;
    uint32_t active = 0;
    for (uint32_t k = 1; k <= n; ++k) {
      const uint64_t bit = site_bit(n, k);
      if ((b & bit) == 0) {
        ++active;
        out[b | bit] += i_unit * std::conj(e[k - 1]) * sqrt_gamma * amp;
      }
    }
    // Lk^d Lk = gamma n_k, diagonal
    out[b] += i_unit * (-0.5 * params.gamma * double(active)) * amp;
  }
  return out;
}

}  // namespace qcp
