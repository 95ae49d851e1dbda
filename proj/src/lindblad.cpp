// Copyright 2026 The esdyn Authors
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

#include "esdyn/lindblad.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "esdyn/concurrence.hpp"
#include "esdyn/error.hpp"

namespace esdyn {

namespace {

struct Generator {
  std::array<Matrix4c, 2> lowering;
  std::array<Matrix4c, 2> lowering_dag;
  Matrix4c number_sum;  // sum_n sigma^(n)+ sigma^(n)
};

const Generator &generator() {
  static const Generator g = [] {
    Matrix2c sigma;
    sigma << 0.0, 0.0, 1.0, 0.0;
    const Matrix2c id = Matrix2c::Identity();
    Generator out;
    out.lowering[0] = Eigen::kroneckerProduct(sigma, id).eval();
    out.lowering[1] = Eigen::kroneckerProduct(id, sigma).eval();
    out.number_sum = Matrix4c::Zero();
    for (int n = 0; n < 2; ++n) {
      out.lowering_dag[n] = out.lowering[n].adjoint();
      out.number_sum += out.lowering_dag[n] * out.lowering[n];
    }
    return out;
  }();
  return g;
}

Matrix4c rk4_step(const Matrix4c &rho, double h) {
  const Matrix4c k1 = lindblad_rhs(rho);
  const Matrix4c k2 = lindblad_rhs(rho + 0.5 * h * k1);
  const Matrix4c k3 = lindblad_rhs(rho + 0.5 * h * k2);
  const Matrix4c k4 = lindblad_rhs(rho + h * k3);
  Matrix4c next = rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return 0.5 * (next + next.adjoint());
}

struct StepPlan {
  long full = 0;
  double rest = 0.0;

  long count() const { return full + (rest > 0.0 ? 1 : 0); }
};

StepPlan plan_steps(double span, double step) {
  StepPlan plan;
  if (span <= 0.0) return plan;
  plan.full = static_cast<long>(std::floor(span / step));
  const double rest = span - static_cast<double>(plan.full) * step;
  if (rest > 1e-12 * std::max(1.0, span)) plan.rest = rest;
  return plan;
}

/// Advances rho by `span` using full steps of `step` and one final partial
/// step. `visit(rho, steps_taken)` runs after every step.
template <typename Visit>
Matrix4c advance(Matrix4c rho, double span, double step, Visit &&visit) {
  const StepPlan plan = plan_steps(span, step);
  long taken = 0;
  for (long i = 0; i < plan.full; ++i) {
    rho = rk4_step(rho, step);
    visit(rho, ++taken);
  }
  if (plan.rest > 0.0) {
    rho = rk4_step(rho, plan.rest);
    visit(rho, ++taken);
  }
  return rho;
}

Matrix4c advance(Matrix4c rho, double span, double step) {
  return advance(std::move(rho), span, step, [](const Matrix4c &, long) {});
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!std::isfinite(step) || step <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "integrator step must be positive");
  if (step > 1e-2) {
    std::ostringstream os;
    os << "integrator step " << step << " exceeds 1e-2";
    throw Error(ErrorCode::StepTooLarge, os.str());
  }
}

Matrix4c lindblad_rhs(const Matrix4c &rho) {
  const Generator &g = generator();
  Matrix4c out = -0.5 * (g.number_sum * rho + rho * g.number_sum);
  for (int n = 0; n < 2; ++n)
    out.noalias() += g.lowering[n] * rho * g.lowering_dag[n];
  return out;
}

DensityMatrix integrate(const DensityMatrix &rho0, Tau tau,
                        const IntegratorConfig &cfg) {
  cfg.validate();
  if (tau.value() == 0.0) return rho0;
  return DensityMatrix(advance(rho0.matrix(), tau.value(), cfg.step),
                       rho0.unnormalized());
}

std::vector<DensityMatrix> integrate_checkpoints(const DensityMatrix &rho0,
                                                 std::span<const double> taus,
                                                 const IntegratorConfig &cfg) {
  cfg.validate();
  std::vector<DensityMatrix> out;
  out.reserve(taus.size());
  Matrix4c rho = rho0.matrix();
  double now = 0.0;
  for (double t : taus) {
    Tau checked(t);
    if (checked.value() < now)
      throw Error(ErrorCode::InvalidArgument, "checkpoints must be sorted");
    rho = advance(rho, checked.value() - now, cfg.step);
    now = checked.value();
    out.emplace_back(rho, rho0.unnormalized());
  }
  return out;
}

std::vector<TrajectorySample> concurrence_trajectory(
    const DensityMatrix &rho0, Tau tau_max, int samples,
    const IntegratorConfig &cfg) {
  if (samples < 2)
    throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    grid[static_cast<std::size_t>(i)] =
        i == samples - 1 ? tau_max.value()
                         : tau_max.value() * i / (samples - 1);
  const auto states = integrate_checkpoints(rho0, grid, cfg);
  std::vector<TrajectorySample> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.push_back({grid[i], wootters_concurrence(states[i])});
  return out;
}

DeathScan scan_for_death(const DensityMatrix &rho0, Tau tau_max,
                         const IntegratorConfig &cfg, int stride) {
  cfg.validate();
  if (stride < 1) throw Error(ErrorCode::InvalidArgument, "stride must be >= 1");
  DeathScan scan;
  const double c0 = wootters_concurrence_raw(rho0);
  if (c0 <= 0.0) {
    scan.verdict = DeathScan::Verdict::NotEntangled;
    scan.min_scaled_raw = c0;
    return scan;
  }
  scan.min_scaled_raw = c0;
  const double span = tau_max.value();
  const long total = plan_steps(span, cfg.step).count();
  bool dead = false;
  advance(rho0.matrix(), span, cfg.step, [&](const Matrix4c &rho, long k) {
    if (dead || (k % stride != 0 && k != total)) return;
    const double t = std::min(span, static_cast<double>(k) * cfg.step);
    const double raw = wootters_concurrence_raw(DensityMatrix(rho, true));
    scan.min_scaled_raw = std::min(scan.min_scaled_raw, raw * std::exp(t));
    if (raw <= 0.0) {
      dead = true;
      scan.tau = t;
    }
  });
  scan.verdict = dead ? DeathScan::Verdict::Death : DeathScan::Verdict::NoDeath;
  return scan;
}

}  // namespace esdyn
