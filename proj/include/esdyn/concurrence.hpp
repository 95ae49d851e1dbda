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

#include <array>

#include "esdyn/dynamics.hpp"
#include "esdyn/state.hpp"

namespace esdyn {

// General two-qubit concurrence.
//
// The square roots of the eigenvalues of rho (sigma_2 x sigma_2) rho^*
// (sigma_2 x sigma_2) are obtained as the singular values of
// sqrt(rho_tilde) sqrt(rho); this keeps near-zero roots accurate, which the
// eigenvalues of the non-Hermitian product do not. X-shaped inputs are
// additionally evaluated with the 2x2 block closed form and the two results
// must agree.

/// sqrt(lambda_i), sorted descending.
std::array<double, 4> wootters_roots(const DensityMatrix &rho);

/// 2 sqrt(lambda_max) - sum_i sqrt(lambda_i), without truncation at zero.
double wootters_concurrence_raw(const DensityMatrix &rho);
double wootters_concurrence(const DensityMatrix &rho);

/// Eigenvalues of rho (sigma_2 x sigma_2) rho^* (sigma_2 x sigma_2) from a
/// general complex eigensolver, sorted descending. Throws SpectrumNotReal when
/// an imaginary part exceeds 1e-9 and SpectrumNegative when a real part is
/// below -1e-10; small negative values are clamped to zero.
std::array<double, 4> spin_flip_spectrum(const DensityMatrix &rho);

/// Concurrence from `spin_flip_spectrum`, the eigenvalue route.
double spectral_concurrence_raw(const DensityMatrix &rho);

/// Block closed form for X-shaped density matrices (entries outside the X
/// pattern are ignored).
double x_state_concurrence_raw(const Matrix4c &rho);
double x_state_concurrence_raw(const XStateParams &s);

/// Bell-diagonal closed forms. The raw values are the untruncated expressions.
double concurrence_c1_raw(const BellPoint &p, Tau tau);
double concurrence_c1(const BellPoint &p, Tau tau);
double concurrence_c2_raw(const BellPoint &p, Tau tau);
double concurrence_c2(const BellPoint &p, Tau tau);

/// C1 for x3 < 0, C2 otherwise.
double concurrence_bell_raw(const BellPoint &p, Tau tau);
double concurrence_bell(const BellPoint &p, Tau tau);

/// Non-diagonal representative with parameters (X0, X1, k).
double concurrence_nondiagonal_raw(double x0, double x1, double k, Tau tau);
double concurrence_nondiagonal(double x0, double x1, double k, Tau tau);

/// Throws InvalidRepresentative unless x0 >= |x1| and k > 0.
void require_nondiagonal_representative(double x0, double x1, double k);

/// X-state parameters of the non-diagonal representative:
/// (X0 + k, X1, -X1, X0 - k, -k, k).
XStateParams nondiagonal_representative(double x0, double x1, double k);

}  // namespace esdyn
