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

#pragma once

#include <span>
#include <vector>

#include "esdyn/dynamics.hpp"
#include "esdyn/state.hpp"

namespace esdyn {

/// Fixed-step classical RK4 in dimensionless time.
struct IntegratorConfig {
  double step = 1e-3;

  /// Throws StepTooLarge when step > 1e-2, InvalidArgument when step <= 0.
  void validate() const;
};

/// d rho / d tau for two qubits under independent amplitude damping with
/// lowering operator sigma = [[0, 0], [1, 0]] on each qubit. The result is
/// Hermitian and traceless; it is returned as a raw matrix since it is not a
/// state.
Matrix4c lindblad_rhs(const Matrix4c &rho);
inline Matrix4c lindblad_rhs(const DensityMatrix &rho) {
  return lindblad_rhs(rho.matrix());
}

DensityMatrix integrate(const DensityMatrix &rho0, Tau tau,
                        const IntegratorConfig &cfg = {});

/// Integrates once and returns the state at each requested time. Times must
/// be nondecreasing.
std::vector<DensityMatrix> integrate_checkpoints(const DensityMatrix &rho0,
                                                 std::span<const double> taus,
                                                 const IntegratorConfig &cfg = {});

struct TrajectorySample {
  double tau = 0.0;
  double concurrence = 0.0;
};

/// Uniform grid of `samples` points on [0, tau_max]; concurrence from the
/// Wootters formula on the integrated states.
std::vector<TrajectorySample> concurrence_trajectory(
    const DensityMatrix &rho0, Tau tau_max, int samples,
    const IntegratorConfig &cfg = {});

/// Outcome of scanning the integrated raw concurrence for its first zero.
struct DeathScan {
  enum class Verdict { Death, NoDeath, NotEntangled };
  Verdict verdict = Verdict::NoDeath;
  double tau = 0.0;             ///< first grid time with raw concurrence <= 0
  double min_scaled_raw = 0.0;  ///< min over the grid of raw C * e^{tau}
};

/// Integrates rho0 to tau_max and reports whether the raw concurrence reaches
/// zero. The concurrence is evaluated every `stride` integrator steps and at
/// tau_max.
DeathScan scan_for_death(const DensityMatrix &rho0, Tau tau_max,
                         const IntegratorConfig &cfg = {}, int stride = 10);

}  // namespace esdyn
