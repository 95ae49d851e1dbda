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

#include "esdyn/classifier.hpp"

#include <cmath>

#include "esdyn/concurrence.hpp"
#include "esdyn/lorentz.hpp"

namespace esdyn {

std::string_view to_string(DynamicalClass c) {
  switch (c) {
    case DynamicalClass::Separable: return "Separable";
    case DynamicalClass::ESD: return "ESD";
    case DynamicalClass::EAD: return "EAD";
  }
  return "Unknown";
}

DynamicalClass classify_bell_point(const BellPoint &p) {
  require_in_tetrahedron(p);
  if (is_separable_bell(p)) return DynamicalClass::Separable;
  if (p.x3 < 0.0) {
    const double s = p.x1 + p.x2;
    const double above_surface = 1.0 + p.x3 - 0.25 * s * s;
    return above_surface > kBoundaryTolerance ? DynamicalClass::ESD
                                              : DynamicalClass::EAD;
  }
  return std::abs(p.x1 - p.x2) >= 2.0 - kBoundaryTolerance
             ? DynamicalClass::EAD
             : DynamicalClass::ESD;
}

DynamicalClass classify_cone_point(const ConePoint &c) {
  return classify_bell_point(normalize_cone_point(c));
}

DynamicalClass classify_nondiagonal(double x0, double x1, double k) {
  require_nondiagonal_representative(x0, x1, k);
  if (x1 == 0.0) return DynamicalClass::Separable;
  return x1 * x1 < 2.0 * k * x0 + x0 * x0 ? DynamicalClass::ESD
                                          : DynamicalClass::EAD;
}

Distances distances(const BellPoint &p) {
  Distances d;
  d.d_p = std::max(0.0, -1.0 + std::abs(p.x1) + std::abs(p.x2) + std::abs(p.x3));
  const double s = p.x1 + p.x2;
  d.d_1 = 1.0 + p.x3 - 0.25 * s * s;
  d.d_2 = 2.0 - std::abs(p.x1) - std::abs(p.x2);
  return d;
}

}  // namespace esdyn
