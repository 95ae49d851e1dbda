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
#include <complex>

#include <Eigen/Dense>

namespace esdyn {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix4 = Eigen::Matrix4d;

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
inline constexpr double kBoundaryTolerance = 1e-12;

/// Pauli matrix sigma_i for i = 0..3 (sigma_0 is the identity).
const Matrix2c &pauli(int i);

/// sigma_i (x) sigma_j, qubit 1 is the left factor. Basis order |00>, |01>,
/// |10>, |11>.
const Matrix4c &pauli_product(int i, int j);

/// Two-qubit density matrix. Construction does not validate; use
/// `DensityMatrix::physical` or `validate()` where positivity matters.
/// Unnormalized states (trace != 1) are allowed when flagged.
class DensityMatrix {
 public:
  DensityMatrix() : entries_(Matrix4c::Identity() / 4.0) {}
  explicit DensityMatrix(const Matrix4c &entries, bool unnormalized = false)
      : entries_(entries), unnormalized_(unnormalized) {}

  /// Validating factory: Hermitian, unit trace (or positive trace when
  /// unnormalized) and positive semidefinite.
  static DensityMatrix physical(const Matrix4c &entries,
                                bool unnormalized = false);

  const Matrix4c &matrix() const { return entries_; }
  bool unnormalized() const { return unnormalized_; }
  double trace() const { return entries_.trace().real(); }

  double hermiticity_error() const;
  double min_eigenvalue() const;
  bool is_physical() const;
  void validate() const;

  Complex operator()(int i, int j) const { return entries_(i, j); }

 private:
  Matrix4c entries_;
  bool unnormalized_ = false;
};

/// Pauli-basis coefficients, rho = 1/4 sum_ij R_ij sigma_i (x) sigma_j.
struct RMatrix {
  Matrix4 entries = Matrix4::Zero();

  RMatrix() = default;
  explicit RMatrix(const Matrix4 &m) : entries(m) {}

  double trace() const { return entries(0, 0); }
  double operator()(int i, int j) const { return entries(i, j); }
};

/// Coordinates of a Bell-diagonal state inside the tetrahedron.
struct BellPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  /// The four Bell-basis eigenvalues, in the order
  /// 1/4 (1 - x1 - x2 - x3), (1 - x1 + x2 + x3), (1 + x1 - x2 + x3),
  /// (1 + x1 + x2 - x3).
  std::array<double, 4> eigenvalue_forms() const;

  friend bool operator==(const BellPoint &, const BellPoint &) = default;
};

/// Unnormalized diagonal representative (X0 >= |Xi|).
struct ConePoint {
  double x0 = 1.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

/// Entries of an X-shaped R matrix:
///
///   | x0  0   0   x4 |
///   | 0   x1  0   0  |
///   | 0   0   x2  0  |
///   | x5  0   0   x3 |
struct XStateParams {
  std::array<double, 6> x{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};

  double operator[](std::size_t i) const { return x[i]; }
  double &operator[](std::size_t i) { return x[i]; }

  RMatrix to_r() const;
  static XStateParams from_r(const RMatrix &r);
  static XStateParams from_bell_point(const BellPoint &p);

  friend bool operator==(const XStateParams &, const XStateParams &) = default;
};

DensityMatrix density_from_r(const RMatrix &r, bool unnormalized = false);
RMatrix r_from_density(const DensityMatrix &rho);
RMatrix r_from_density(const Matrix4c &rho);

bool in_tetrahedron(double x1, double x2, double x3);
inline bool in_tetrahedron(const BellPoint &p) {
  return in_tetrahedron(p.x1, p.x2, p.x3);
}
/// Throws TetrahedronViolation when p is outside the closed tetrahedron.
void require_in_tetrahedron(const BellPoint &p);

/// Closed octahedron |x1| + |x2| + |x3| <= 1.
bool is_separable_bell(const BellPoint &p);

DensityMatrix bell_point_to_density(const BellPoint &p);
DensityMatrix xstate_to_density(const XStateParams &s);

/// True when the R matrix has the X sparsity pattern up to `tol`.
bool is_x_shaped(const RMatrix &r, double tol = 1e-12);

/// Partial transpose on the second qubit.
Matrix4c partial_transpose(const Matrix4c &rho);

}  // namespace esdyn
