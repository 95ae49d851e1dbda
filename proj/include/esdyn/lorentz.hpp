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

#include <string_view>

#include "esdyn/state.hpp"

namespace esdyn {

enum class NormalFormClass { Diagonal, NonDiagonal, Apex };

std::string_view to_string(NormalFormClass c);

/// SL(2,C) x SL(2,C) normal form of a two-qubit state.
///
/// x0..x3 are the (unnormalized) Lorentz singular values. Diagonal forms are
/// reported with |x1| <= |x2| <= |x3|, x1, x2 <= 0 and sign(x3) chosen so that
/// x0 x1 x2 x3 has the sign of det R. NonDiagonal forms have x3 = x0,
/// x2 = -x1, x1 >= 0 and the class-canonical k = 1.
struct NormalForm {
  NormalFormClass kind = NormalFormClass::Apex;
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
  double k = 0.0;

  /// (x1, x2, x3) / x0 for the Diagonal class.
  BellPoint bell_point() const;
  ConePoint cone_point() const { return {x0, x1, x2, x3}; }

  /// diag(x0, x1, x2, x3), or the Jordan-type matrix with +-k in the (0, 3)
  /// corners for the NonDiagonal class.
  RMatrix representative() const;
};

/// Tolerances used by `lorentz_normal_form`, relative to ||R||_F^2.
struct NormalFormTolerances {
  double apex = 1e-9;          ///< trace of eta R^T eta R below this is apex
  double cluster = 1e-6;       ///< eigenvalues of N closer than this cluster
  double diagonalizable = 1e-5;  ///< cluster rank test: zero singular value
  double defective = 1e-3;       ///< cluster rank test: nonzero singular value
};

/// Computes class and Lorentz singular values from N = eta R^T eta R with
/// eta = diag(1, -1, -1, -1). Throws InvalidState for unphysical R and
/// ClassificationAmbiguous when the rank test on the leading eigenvalue
/// cluster falls between the two thresholds.
NormalForm lorentz_normal_form(const RMatrix &r,
                               const NormalFormTolerances &tol = {});

/// (x1, x2, x3) / x0. Throws DegenerateApex when x0 <= 1e-12.
BellPoint normalize_cone_point(const ConePoint &c);

}  // namespace esdyn
