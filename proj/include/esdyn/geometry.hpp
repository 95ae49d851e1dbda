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
#include <vector>

#include "esdyn/state.hpp"

namespace esdyn {

enum class Surface {
  Tetrahedron,    ///< the four faces of the Bell tetrahedron
  Octahedron,     ///< |x1| + |x2| + |x3| = 1, sampled face by face
  Quadratic,      ///< x3 = (x1 + x2)^2 / 4 - 1
  CdPlanes,       ///< |x1 - x2| = 2
  ConeSeparable,  ///< X0 = |X1| + |X2| + |X3| on the slice X0 = 1
  ConeEad,        ///< X0 + X3 = (X1 + X2)^2 / (4 X0) on the slice X0 = 1
};

std::string_view to_string(Surface s);

/// Parses the surface names used on the command line (`tetrahedron`,
/// `octahedron`, `quadratic`, `cd_planes`, `cone_separable`, `cone_ead`).
/// Throws InvalidArgument for anything else.
Surface surface_from_name(std::string_view name);

struct SurfacePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  BellPoint bell_point() const { return {x1, x2, x3}; }
  auto operator<=>(const SurfacePoint &) const = default;
};

/// Value of the defining equation at p (zero on the surface). For the
/// tetrahedron this is the smallest eigenvalue form.
double surface_residual(Surface s, const BellPoint &p);

/// Points on the surface clipped to the closed tetrahedron, deduplicated and
/// sorted. Planar pieces use integer barycentric grids with `resolution`
/// points per edge; the graph surfaces use a `resolution` x `resolution` grid
/// over (x1, x2) (over (x1, x3) for the vertical planes).
std::vector<SurfacePoint> sample_surface(Surface s, int resolution);

}  // namespace esdyn
