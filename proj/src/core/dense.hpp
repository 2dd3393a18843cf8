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

#ifndef QCP_CORE_DENSE_HPP
#define QCP_CORE_DENSE_HPP

#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "model.hpp"

namespace qcp {

// One stochastic trajectory, dense or MPS produced.
//   densities: (n_steps + 1) x N, local densities S_k on the full time grid
//              including t = 0.
//   het:       n_steps x N, integrated heterodyne increments
//              dQ_k = <L_k> dt + dxi_k; the current is O_k = dQ_k / dt.
struct TrajectoryRecord {
  ModelParams params;
  uint64_t trajectory_id = 0;
  uint64_t master_seed = 0;
  Eigen::MatrixXd densities;
  Eigen::MatrixXcd het;
  // MPS backend only: total discarded SVD weight per step (empty for dense).
  Eigen::VectorXd discarded_weight;
};

struct StepOutput {
  Eigen::VectorXd densities;  // pre-step S_k
  Eigen::VectorXcd het;       // dQ_k of this step
};

// Largest N the dense backend accepts (2^N amplitudes).
constexpr uint32_t kDenseSiteLimit = 14;

// All-active product state |•••...•>.
DenseState fully_active_state(uint32_t n_sites);
// All-inactive (absorbing) product state.
DenseState all_inactive_state(uint32_t n_sites);

// Euler-Maruyama update of the monitored state,
//   |psi'> = |psi> - i H_eff dt |psi> + sum_k (L_k - <L_k>) dxi_k |psi>,
// with all expectation values frozen at the input state, followed by
// renormalization. `step_index` only labels blowup errors.
StepOutput em_step(DenseState& state, const ModelParams& params,
                   const SparseOperator& hamiltonian,
                   const Eigen::VectorXcd& increments, uint64_t step_index = 0);

// Full trajectory with the per-(site, step) noise stream addressed by
// (master_seed, trajectory_id). `initial` defaults to the all-active state.
// `increments_override`, when given, replaces the stream (row j = step j)
// and is used by oracle tests that couple runs across backends or step sizes.
TrajectoryRecord simulate_trajectory(
    const ModelParams& params, uint64_t trajectory_id, uint64_t master_seed,
    const std::optional<DenseState>& initial = std::nullopt,
    const Eigen::MatrixXcd* increments_override = nullptr);

// Coherent sub-step rule for the split-step reference integrator below.
enum class CoherentKind {
  trotter_split,  // exp(-i H_odd dt) then exp(-i H_even dt), identical to TEBD
  exact_exp,      // exp(-i H dt) via dense eigendecomposition
};

// Dense reference for the split-step scheme the MPS backend uses: coherent
// sub-step, then the one-site stochastic/dissipative update
//   |psi'> = [1 + sum_k (dt(<Lk^d>Lk - Lk^dLk/2 - |<Lk>|^2/2) + (Lk-<Lk>)dxi_k)] |psi>
// with expectations evaluated after the coherent sub-step, then
// renormalization. With CoherentKind::trotter_split this realizes the same
// per-step map as the MPS backend, so it serves as its machinery oracle.
TrajectoryRecord simulate_trajectory_split(
    const ModelParams& params, uint64_t trajectory_id, uint64_t master_seed,
    CoherentKind coherent,
    const std::optional<DenseState>& initial = std::nullopt,
    const Eigen::MatrixXcd* increments_override = nullptr);

// Adds sum_k [ dt(conj(e_k)L_k - Lk^dLk/2 - |e_k|^2/2) + (L_k - e_k)dxi_k ]|psi>
// into `out` (the shared one-site part of both schemes above).
void accumulate_onsite_terms(const DenseState& psi, const ModelParams& params,
                             const Eigen::VectorXcd& e,
                             const Eigen::VectorXcd& increments,
                             DenseState& out);

}  // namespace qcp

#endif
