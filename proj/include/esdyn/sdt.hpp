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

#include <functional>
#include <optional>

#include "esdyn/classifier.hpp"
#include "esdyn/state.hpp"

namespace esdyn {

/// Dynamical class plus the sudden-death time gamma * t (present iff ESD).
struct SdtResult {
  DynamicalClass kind = DynamicalClass::Separable;
  std::optional<double> tau_star;
};

/// Coordinate form: for x3 < 0,
///   tau* = ln[ -(1 + x3) / (sqrt((x1 + x2)^2 - 4 x3) - 2) ],
/// for x3 >= 0, tau* = ln[(1 + x3) / (2 - |x1 - x2|)].
SdtResult sdt_closed_form(const BellPoint &p);

/// Distance form, x3 < 0 branch:
///   tau* = ln[ (d_p / 2 - 1 + sqrt(1 - d_p - d_1)) / (sqrt(1 - d_1) - 1) ].
/// Evaluated with the square-root differences rewritten to avoid
/// cancellation, so it stays accurate as d_1 -> 0 or d_p -> 0.
double sdt_from_quadratic_distances(double d_p, double d_1);

/// Distance form, x3 >= 0 branch: tau* = ln(d_p / d_2 + 1).
double sdt_from_plane_distances(double d_p, double d_2);

/// Distance forms applied to `distances(p)`. Throws NotEsd unless p is ESD.
SdtResult sdt_geometric(const BellPoint &p);

/// SDT of the normalized cone point.
SdtResult sdt_cone(const ConePoint &c);

/// Root y >= 1 of (x1^2 - x0 (2k + x0)) y^2 + 2 x0 (k + x0) y - x0^2 = 0,
/// tau* = ln y.
SdtResult sdt_nondiagonal(double x0, double x1, double k);

inline constexpr double kEadHorizon = 60.0;
inline constexpr int kScanSamples = 10000;

/// First zero of a raw concurrence on (0, tau_max]: scan `kScanSamples` uniform
/// points, then bisect the bracket down to adjacent doubles. No sign change
/// means EAD; tau_max must be at least `kEadHorizon`.
SdtResult sdt_numeric(const std::function<double(double)> &raw_concurrence,
                      double tau_max = kEadHorizon);

}  // namespace esdyn
