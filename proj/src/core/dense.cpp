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

#include "dense.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"
#include "gates.hpp"
#include "noise.hpp"

namespace qcp {

DenseState fully_active_state(uint32_t n_sites) {
  DenseState s = DenseState::Zero(uint64_t(1) << n_sites);
  s[0] = 1.0;
  return s;
}

DenseState all_inactive_state(uint32_t n_sites) {
  DenseState s = DenseState::Zero(uint64_t(1) << n_sites);
  s[s.size() - 1] = 1.0;
  return s;
}

void accumulate_onsite_terms(const DenseState& psi, const ModelParams& params,
                             const Eigen::VectorXcd& e,
                             const Eigen::VectorXcd& increments,
                             DenseState& out) {
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  const double sqrt_gamma = std::sqrt(params.gamma);
  const double dt = params.dt;

  // scalar part: sum_k (-dt |e_k|^2 / 2 - e_k dxi_k)
  Complex scalar = 0.0;
  for (uint32_t k = 0; k < n; ++k)
    scalar += -0.5 * dt * std::norm(e[k]) - e[k] * increments[k];
  out += scalar * psi;

  // per-site lowering amplitude sqrt(gamma) (dt conj(e_k) + dxi_k)
  Eigen::VectorXcd lower(n);
  for (uint32_t k = 0; k < n; ++k)
    lower[k] = sqrt_gamma * (dt * std::conj(e[k]) + increments[k]);

  const double diag = -0.5 * params.gamma * dt;  // per active site
  for (uint64_t b = 0; b < dim; ++b) {
    const Complex amp = psi[b];
    if (amp == Complex(0.0)) continue;
    uint32_t active = 0;
    for (uint32_t k = 1; k <= n; ++k) {
      const uint64_t bit = site_bit(n, k);
      if ((b & bit) == 0) {
        ++active;
        out[b | bit] += lower[k - 1] * amp;
      }
    }
    if (active) out[b] += diag * double(active) * amp;
  }
}

namespace {

void renormalize_or_fail(DenseState& state, uint64_t step_index) {
  const double norm = state.norm();
  if (!std::isfinite(norm) || norm == 0.0)
    fail(ErrorCode::numeric,
         "integration blowup at step " + std::to_string(step_index));
  state /= norm;
}

Eigen::VectorXd densities_nocheck(const DenseState& state, uint32_t n) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  const uint64_t dim = uint64_t(1) << n;
  for (uint64_t b = 0; b < dim; ++b) {
    const double w = std::norm(state[b]);
    if (w == 0.0) continue;
    for (uint32_t k = 1; k <= n; ++k)
      if (site_active(b, n, k)) s[k - 1] += w;
  }
  return s;
}

}  // namespace

StepOutput em_step(DenseState& state, const ModelParams& params,
                   const SparseOperator& hamiltonian,
                   const Eigen::VectorXcd& increments, uint64_t step_index) {
  StepOutput out;
  out.densities = densities_nocheck(state, params.n_sites);
  const Eigen::VectorXcd e = expect_jump_all(state, params);

  DenseState next = state;
  next += Complex(0.0, -params.dt) * (hamiltonian * state);
  accumulate_onsite_terms(state, params, e, increments, next);
  renormalize_or_fail(next, step_index);
  state = std::move(next);

  out.het = e * params.dt + increments;
  return out;
}

namespace {

TrajectoryRecord run_trajectory(
    const ModelParams& params, uint64_t trajectory_id, uint64_t master_seed,
    const std::optional<DenseState>& initial,
    const Eigen::MatrixXcd* increments_override,
    const std::optional<CoherentKind>& split_coherent) {
  params.validate();
  const uint32_t n = params.n_sites;
  if (n > kDenseSiteLimit)
    fail(ErrorCode::capability,
         "dense backend is limited to " + std::to_string(kDenseSiteLimit) +
             " sites (requested " + std::to_string(n) +
             "); use the mps backend");
  const uint64_t steps = params.n_steps();

  DenseState state = initial ? *initial : fully_active_state(n);
  require_normalized(state);

  const NoiseStream stream{master_seed, trajectory_id};
  if (increments_override &&
      (uint64_t(increments_override->rows()) != steps ||
       uint32_t(increments_override->cols()) != n))
    fail(ErrorCode::invalid_argument, "increment override has wrong shape");

  SparseOperator h;
  Eigen::Matrix4cd gate;
  Eigen::MatrixXcd exact_u;      // exp(-i H dt) for CoherentKind::exact_exp
  if (!split_coherent) {
    h = build_hamiltonian(params);
  } else if (*split_coherent == CoherentKind::trotter_split) {
    gate = two_site_gate(params.omega, params.dt);
  } else {
    const Eigen::MatrixXcd hd = Eigen::MatrixXcd(build_hamiltonian(params));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hd);
    Eigen::VectorXcd phase(hd.rows());
    for (Eigen::Index i = 0; i < hd.rows(); ++i)
      phase[i] = std::exp(Complex(0.0, -params.dt * eig.eigenvalues()[i]));
    exact_u = eig.eigenvectors() * phase.asDiagonal() *
              eig.eigenvectors().adjoint();
  }

  TrajectoryRecord rec;
  rec.params = params;
  rec.trajectory_id = trajectory_id;
  rec.master_seed = master_seed;
  rec.densities.resize(steps + 1, n);
  rec.het.resize(steps, n);

  for (uint64_t j = 0; j < steps; ++j) {
    Eigen::VectorXcd dxi =
        increments_override
            ? Eigen::VectorXcd(increments_override->row(j).transpose())
            : sample_increment_row(stream, n, j, params.dt);

    if (!split_coherent) {
      const StepOutput so = em_step(state, params, h, dxi, j);
      rec.densities.row(j) = so.densities.transpose();
      rec.het.row(j) = so.het.transpose();
    } else {
      rec.densities.row(j) = densities_nocheck(state, n).transpose();
      if (*split_coherent == CoherentKind::trotter_split) {
        for (uint32_t k = 1; k < n; k += 2)
          apply_two_site_gate_dense(state, n, k, gate);
        for (uint32_t k = 2; k < n; k += 2)
          apply_two_site_gate_dense(state, n, k, gate);
      } else {
        state = exact_u * state;
      }
      const Eigen::VectorXcd e = expect_jump_all(state, params);
      DenseState next = state;
      accumulate_onsite_terms(state, params, e, dxi, next);
      renormalize_or_fail(next, j);
      state = std::move(next);
      rec.het.row(j) = (e * params.dt + dxi).transpose();
    }
  }
  rec.densities.row(steps) = densities_nocheck(state, n).transpose();
  return rec;
}

}  // namespace

TrajectoryRecord simulate_trajectory(const ModelParams& params,
                                     uint64_t trajectory_id,
                                     uint64_t master_seed,
                                     const std::optional<DenseState>& initial,
                                     const Eigen::MatrixXcd* override_in) {
  return run_trajectory(params, trajectory_id, master_seed, initial,
                        override_in, std::nullopt);
}

TrajectoryRecord simulate_trajectory_split(
    const ModelParams& params, uint64_t trajectory_id, uint64_t master_seed,
    CoherentKind coherent, const std::optional<DenseState>& initial,
    const Eigen::MatrixXcd* override_in) {
  return run_trajectory(params, trajectory_id, master_seed, initial,
                        override_in, coherent);
}

}  // namespace qcp
