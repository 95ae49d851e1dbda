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

#include "esdyn/state.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "esdyn/error.hpp"

namespace esdyn {

namespace {

std::array<Matrix2c, 4> make_paulis() {
  const Complex i(0.0, 1.0);
  std::array<Matrix2c, 4> s;
  s[0] << 1.0, 0.0, 0.0, 1.0;
  s[1] << 0.0, 1.0, 1.0, 0.0;
  s[2] << 0.0, -i, i, 0.0;
  s[3] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

std::array<Matrix4c, 16> make_products() {
  std::array<Matrix4c, 16> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[4 * i + j] = Eigen::kroneckerProduct(pauli(i), pauli(j)).eval();
  return out;
}

}  // namespace

const Matrix2c &pauli(int i) {
  static const std::array<Matrix2c, 4> table = make_paulis();
  return table.at(static_cast<std::size_t>(i));
}

const Matrix4c &pauli_product(int i, int j) {
  static const std::array<Matrix4c, 16> table = make_products();
  return table.at(static_cast<std::size_t>(4 * i + j));
}

DensityMatrix DensityMatrix::physical(const Matrix4c &entries,
                                      bool unnormalized) {
  DensityMatrix rho(entries, unnormalized);
  rho.validate();
  return rho;
}

double DensityMatrix::hermiticity_error() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const Matrix4c h = 0.5 * (entries_ + entries_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical() const {
  if (!entries_.allFinite()) return false;
  if (hermiticity_error() > kHermiticityTolerance) return false;
  const double tr = trace();
  if (unnormalized_) {
    if (!(tr > 0.0)) return false;
  } else if (std::abs(tr - 1.0) > kTraceTolerance) {
    return false;
  }
  return min_eigenvalue() >= -kPositivityTolerance;
}

void DensityMatrix::validate() const {
  if (!entries_.allFinite())
    throw Error(ErrorCode::InvalidState, "non-finite density matrix entry");
  if (hermiticity_error() > kHermiticityTolerance)
    throw Error(ErrorCode::InvalidState, "density matrix is not Hermitian");
  const double tr = trace();
  if (unnormalized_ ? !(tr > 0.0) : std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "bad trace " << tr;
    throw Error(ErrorCode::InvalidState, os.str());
  }
  const double lmin = min_eigenvalue();
  if (lmin < -kPositivityTolerance) {
    std::ostringstream os;
    os << "density matrix is not positive semidefinite (min eigenvalue "
       << lmin << ")";
    throw Error(ErrorCode::InvalidState, os.str());
  }
}

std::array<double, 4> BellPoint::eigenvalue_forms() const {
  return {0.25 * (1.0 - x1 - x2 - x3), 0.25 * (1.0 - x1 + x2 + x3),
          0.25 * (1.0 + x1 - x2 + x3), 0.25 * (1.0 + x1 + x2 - x3)};
}

RMatrix XStateParams::to_r() const {
  RMatrix r;
  r.entries(0, 0) = x[0];
  r.entries(1, 1) = x[1];
  r.entries(2, 2) = x[2];
  r.entries(3, 3) = x[3];
  r.entries(0, 3) = x[4];
  r.entries(3, 0) = x[5];
  return r;
}

XStateParams XStateParams::from_r(const RMatrix &r) {
  if (!is_x_shaped(r, 1e-12 * std::max(1.0, std::abs(r.trace()))))
    throw Error(ErrorCode::InvalidArgument, "R matrix is not X-shaped");
  const Matrix4 &m = r.entries;
  return XStateParams{{m(0, 0), m(1, 1), m(2, 2), m(3, 3), m(0, 3), m(3, 0)}};
}

XStateParams XStateParams::from_bell_point(const BellPoint &p) {
  return XStateParams{{1.0, p.x1, p.x2, p.x3, 0.0, 0.0}};
}

DensityMatrix density_from_r(const RMatrix &r, bool unnormalized) {
  Matrix4c rho = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (r.entries(i, j) != 0.0) rho += r.entries(i, j) * pauli_product(i, j);
  return DensityMatrix(rho / 4.0, unnormalized);
}

RMatrix r_from_density(const Matrix4c &rho) {
  RMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.entries(i, j) = (rho * pauli_product(i, j)).trace().real();
  return r;
}

RMatrix r_from_density(const DensityMatrix &rho) {
  return r_from_density(rho.matrix());
}

bool in_tetrahedron(double x1, double x2, double x3) {
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3))
    return false;
  for (double form : BellPoint{x1, x2, x3}.eigenvalue_forms())
    if (form < -kBoundaryTolerance) return false;
  return true;
}

void require_in_tetrahedron(const BellPoint &p) {
  if (!in_tetrahedron(p)) {
    std::ostringstream os;
    os << "point (" << p.x1 << ", " << p.x2 << ", " << p.x3
       << ") lies outside the tetrahedron";
    throw Error(ErrorCode::TetrahedronViolation, os.str());
  }
}

bool is_separable_bell(const BellPoint &p) {
  return std::abs(p.x1) + std::abs(p.x2) + std::abs(p.x3) <=
         1.0 + kBoundaryTolerance;
}

DensityMatrix bell_point_to_density(const BellPoint &p) {
  require_in_tetrahedron(p);
  return density_from_r(XStateParams::from_bell_point(p).to_r());
}

DensityMatrix xstate_to_density(const XStateParams &s) {
  return density_from_r(s.to_r(), std::abs(s[0] - 1.0) > kTraceTolerance);
}

bool is_x_shaped(const RMatrix &r, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_pattern =
          i == j || (i == 0 && j == 3) || (i == 3 && j == 0);
      if (!on_pattern && std::abs(r.entries(i, j)) > tol) return false;
    }
  return true;
}

Matrix4c partial_transpose(const Matrix4c &rho) {
  Matrix4c out;
  // Index (a b),(c d) -> (a d),(c b) with a, c on qubit 1.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
  return out;
}

}  // namespace esdyn
