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

#ifndef QCP_CORE_LINDBLAD_HPP
#define QCP_CORE_LINDBLAD_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "model.hpp"

namespace qcp {

using DensityMatrix = Eigen::MatrixXcd;

// Deterministic master-equation integrator: the brute-force reference the
// stochastic backends are validated against. Dense in 2^N, so N is capped.
constexpr uint32_t kLindbladSiteLimit = 7;

// rho_dot = -i[H, rho] + sum_k (L_k rho L_k^d - 1/2 {L_k^d L_k, rho}).
// The generator is applied matrix-free (the jump part is an index remap).
DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ModelParams& params,
                           const SparseOperator& hamiltonian);

// Checks Hermiticity (1e-10), unit trace (1e-10) and positivity (>= -1e-8).
void validate_density_matrix(const DensityMatrix& rho);

// Classical RK4 up to params.t_max with ODE step dt_ode. `observer`, when
// set, is called at every grid multiple of params.dt (including t=0 and the
// final time) and mid-integration states are not stored.
DensityMatrix integrate_master_equation(
    const ModelParams& params, const DensityMatrix& rho0, double dt_ode,
    const std::function<void(double, const DensityMatrix&)>& observer = {});

// 1/2 ||a - b||_1 for Hermitian a, b.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Site densities Tr(rho n_k).
Eigen::VectorXd densities_of(const DensityMatrix& rho, uint32_t n_sites);

}  // namespace qcp

#endif
