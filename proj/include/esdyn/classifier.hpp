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

/// Long-time fate of the entanglement of an initial state.
enum class DynamicalClass { Separable, ESD, EAD };

std::string_view to_string(DynamicalClass c);

/// Distances of a Bell point to the separability boundary (d_p), to the
/// quadratic EAD surface measured perpendicular to the Peres-Horodecki plane
/// (d_1, x3 < 0 branch) and to the planes |x1 - x2| = 2 (d_2, x3 >= 0 branch).
struct Distances {
  double d_p = 0.0;
  double d_1 = 0.0;
  double d_2 = 0.0;
};

/// Separable inside the closed octahedron. Otherwise, for x3 < 0 the point is
/// ESD strictly above the quadratic surface x3 = (x1 + x2)^2 / 4 - 1 and EAD on
/// or below it; for x3 >= 0 only |x1 - x2| = 2 (the vertices C and D) is EAD.
/// Boundary comparisons use a 1e-12 tolerance.
DynamicalClass classify_bell_point(const BellPoint &p);

/// Classification of the normalized point (x1, x2, x3) / x0.
DynamicalClass classify_cone_point(const ConePoint &c);

/// Non-diagonal representatives: Separable when x1 = 0, otherwise ESD since
/// x1^2 <= x0^2 < 2 k x0 + x0^2.
DynamicalClass classify_nondiagonal(double x0, double x1, double k);

/// d_p is clamped at zero for separable points.
Distances distances(const BellPoint &p);

}  // namespace esdyn
