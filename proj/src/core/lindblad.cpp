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

#include "lindblad.hpp"

#include <cmath>
#include <string>

#include "errors.hpp"

namespace qcp {

DensityMatrix lindblad_rhs(const DensityMatrix& rho, const ModelParams& params,
                           const SparseOperator& hamiltonian) {
  const uint32_t n = params.n_sites;
  const uint64_t dim = uint64_t(1) << n;
  if (uint64_t(rho.rows()) != dim || uint64_t(rho.cols()) != dim)
    fail(ErrorCode::invalid_argument, "density matrix dimension mismatch");

  const Complex i_unit(0.0, 1.0);
  DensityMatrix out = -i_unit * (hamiltonian * rho - rho * hamiltonian);

  const double g = params.gamma;
  for (uint32_t k = 1; k <= n; ++k) {
    const uint64_t bit = site_bit(n, k);
    for (uint64_t r = 0; r < dim; ++r) {
      const bool r_active = (r & bit) == 0;
      for (uint64_t c = 0; c < dim; ++c) {
        const bool c_active = (c & bit) == 0;
        const Complex v = rho(r, c);
        if (v == Complex(0.0)) continue;
        // gamma sigma^-_k rho sigma^+_k
        if (r_active && c_active) out(r | bit, c | bit) += g * v;
        // -gamma/2 {n_k, rho}
        if (r_active) out(r, c) -= 0.5 * g * v;
        if (c_active) out(r, c) -= 0.5 * g * v;
      }
    }
  }
  return out;
}

void validate_density_matrix(const DensityMatrix& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    fail(ErrorCode::numeric, "density matrix lost Hermiticity");
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 ||
      std::abs(rho.trace().imag()) > 1e-10)
    fail(ErrorCode::numeric, "density matrix trace drifted from 1");
  Eigen::SelfAdjointEigenSolver<DensityMatrix> eig(rho);
  if (eig.eigenvalues().minCoeff() < -1e-8)
    fail(ErrorCode::numeric, "density matrix lost positivity");
}

DensityMatrix integrate_master_equation(
    const ModelParams& params, const DensityMatrix& rho0, double dt_ode,
    const std::function<void(double, const DensityMatrix&)>& observer) {
  params.validate();
  if (params.n_sites > kLindbladSiteLimit)
    fail(ErrorCode::capability,
         "master-equation integrator is limited to " +
             std::to_string(kLindbladSiteLimit) +
             " sites; use the stochastic dense or mps backends");
  if (!(dt_ode > 0.0))
    fail(ErrorCode::invalid_argument, "dt_ode must be > 0");

  const SparseOperator h = build_hamiltonian(params);
  DensityMatrix rho = rho0;
  validate_density_matrix(rho);

  const uint64_t grid_steps = params.n_steps();
  // Integer number of ODE sub-steps per grid step.
  const uint64_t sub = std::max<uint64_t>(1, uint64_t(std::llround(params.dt / dt_ode)));
  const double dts = params.dt / double(sub);

  if (observer) observer(0.0, rho);
  for (uint64_t jg = 0; jg < grid_steps; ++jg) {
    for (uint64_t js = 0; js < sub; ++js) {
      const DensityMatrix k1 = lindblad_rhs(rho, params, h);
      const DensityMatrix k2 = lindblad_rhs(rho + 0.5 * dts * k1, params, h);
      const DensityMatrix k3 = lindblad_rhs(rho + 0.5 * dts * k2, params, h);
      const DensityMatrix k4 = lindblad_rhs(rho + dts * k3, params, h);
      rho += (dts / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    validate_density_matrix(rho);
    if (observer) observer(double(jg + 1) * params.dt, rho);
  }
  return rho;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  const DensityMatrix d = 0.5 * ((a - b) + (a - b).adjoint().eval());
  Eigen::SelfAdjointEigenSolver<DensityMatrix> eig(d);
  return 0.5 * eig.eigenvalues().cwiseAbs().sum();
}

Eigen::VectorXd densities_of(const DensityMatrix& rho, uint32_t n_sites) {
  const uint64_t dim = uint64_t(1) << n_sites;
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n_sites);
  for (uint64_t b = 0; b < dim; ++b) {
    const double w = rho(b, b).real();
    for (uint32_t k = 1; k <= n_sites; ++k)
      if (site_active(b, n_sites, k)) s[k - 1] += w;
  }
  return s;
}

}  // namespace qcp
