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

#include "esdyn/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "esdyn/error.hpp"

namespace esdyn {

std::string_view to_string(NormalFormClass c) {
  switch (c) {
    case NormalFormClass::Diagonal: return "Diagonal";
    case NormalFormClass::NonDiagonal: return "NonDiagonal";
    case NormalFormClass::Apex: return "Apex";
  }
  return "Unknown";
}

BellPoint NormalForm::bell_point() const {
  if (kind != NormalFormClass::Diagonal)
    throw Error(ErrorCode::InvalidArgument,
                "only diagonal normal forms map to a Bell point");
  return normalize_cone_point(cone_point());
}

RMatrix NormalForm::representative() const {
  RMatrix r;
  r.entries(0, 0) = x0;
  r.entries(1, 1) = x1;
  r.entries(2, 2) = x2;
  r.entries(3, 3) = x3;
  if (kind == NormalFormClass::NonDiagonal) {
    r.entries(0, 0) += k;
    r.entries(3, 3) -= k;
    r.entries(0, 3) = -k;
    r.entries(3, 0) = k;
  }
  return r;
}

BellPoint normalize_cone_point(const ConePoint &c) {
  if (!std::isfinite(c.x0) || c.x0 <= 1e-12) {
    std::ostringstream os;
    os << "cone point with x0 = " << c.x0 << " is at the apex";
    throw Error(ErrorCode::DegenerateApex, os.str());
  }
  return {c.x1 / c.x0, c.x2 / c.x0, c.x3 / c.x0};
}

namespace {

void require_physical(const RMatrix &r) {
  if (!r.entries.allFinite())
    throw Error(ErrorCode::InvalidState, "non-finite R matrix entry");
  if (!(r.trace() > 0.0))
    throw Error(ErrorCode::InvalidState, "R_00 (the trace) must be positive");
  const DensityMatrix rho = density_from_r(r, true);
  if (rho.min_eigenvalue() < -kPositivityTolerance * r.trace())
    throw Error(ErrorCode::InvalidState,
                "R matrix does not describe a positive semidefinite state");
}

[[noreturn]] void ambiguous(const std::string &what) {
  throw Error(ErrorCode::ClassificationAmbiguous, what);
}

}  // namespace

NormalForm lorentz_normal_form(const RMatrix &r,
                               const NormalFormTolerances &tol) {
  require_physical(r);

  const Eigen::Vector4d eta(1.0, -1.0, -1.0, -1.0);
  const Matrix4 n = eta.asDiagonal() * r.entries.transpose() *
                    eta.asDiagonal() * r.entries;
  const double scale = r.entries.squaredNorm();

  NormalForm out;
  if (n.trace() <= tol.apex * scale) return out;

  Eigen::EigenSolver<Matrix4> solver(n, false);
  std::vector<Complex> lambda(solver.eigenvalues().begin(),
                              solver.eigenvalues().end());
  std::sort(lambda.begin(), lambda.end(), [](Complex a, Complex b) {
    return a.real() > b.real();
  });
  for (const Complex &l : lambda) {
    if (std::abs(l.imag()) > tol.cluster * scale) {
      std::ostringstream os;
      os << "eigenvalue " << l << " of eta R^T eta R is not real";
      ambiguous(os.str());
    }
    if (l.real() < -tol.apex * scale)
      throw Error(ErrorCode::InvalidState,
                  "eta R^T eta R has a negative eigenvalue");
  }

  std::size_t cluster = 1;
  while (cluster < lambda.size() &&
         std::abs(lambda[cluster] - lambda[0]) <= tol.cluster * scale)
    ++cluster;

  double top = lambda[0].real();
  bool defective = false;
  if (cluster > 1) {
    top = 0.0;
    for (std::size_t i = 0; i < cluster; ++i) top += lambda[i].real();
    top /= static_cast<double>(cluster);
    const Matrix4 shifted = (n - top * Matrix4::Identity()) / scale;
    Eigen::JacobiSVD<Matrix4> svd(shifted);
    // Singular values come sorted descending; the cluster is diagonalizable
    // iff the `cluster` smallest vanish.
    const double probe = svd.singularValues()(static_cast<int>(4 - cluster));
    if (probe >= tol.defective) {
      defective = true;
    } else if (probe > tol.diagonalizable) {
      std::ostringstream os;
      os << "rank test on the leading eigenvalue cluster is inconclusive "
            "(singular value "
         << probe << ")";
      ambiguous(os.str());
    }
  }

  out.x0 = std::sqrt(std::max(0.0, top));
  if (defective) {
    double rest = 0.0;
    if (cluster == 2) {
      rest = std::sqrt(std::max(0.0, 0.5 * (lambda[2].real() + lambda[3].real())));
    } else if (cluster == 4) {
      rest = out.x0;
    } else {
      ambiguous("defective leading eigenvalue with an unexpected multiplicity");
    }
    out.kind = NormalFormClass::NonDiagonal;
    out.x1 = rest;
    out.x2 = -rest;
    out.x3 = out.x0;
    out.k = 1.0;
    return out;
  }

  std::array<double, 3> mag{};
  for (std::size_t i = 0; i < 3; ++i)
    mag[i] = std::sqrt(std::max(0.0, lambda[i + 1].real()));
  std::sort(mag.begin(), mag.end());

  const double det = r.entries.determinant();
  // A vanishing magnitude leaves the sign free; take the all-negative pattern.
  const bool negative = mag[0] <= 1e-9 * out.x0 || det < 0.0;

  out.kind = NormalFormClass::Diagonal;
  out.x1 = -mag[0];
  out.x2 = -mag[1];
  out.x3 = negative ? -mag[2] : mag[2];

  const BellPoint p = out.bell_point();
  for (double form : p.eigenvalue_forms())
    if (form < -1e-9)
      throw Error(ErrorCode::InvalidState,
                  "normal form falls outside the tetrahedron");
  return out;
}

}  // namespace esdyn
