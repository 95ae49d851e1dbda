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

#include "esdyn/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

#include "esdyn/error.hpp"

namespace esdyn {

namespace {

using Vertex = std::array<int, 3>;

constexpr std::array<Vertex, 4> kTetrahedron{{
    {1, 1, -1},   // A
    {-1, -1, -1}, // B
    {1, -1, 1},   // C
    {-1, 1, 1},   // D
}};

double grid_value(int i, int resolution) {
  return static_cast<double>(2 * i - (resolution - 1)) / (resolution - 1);
}

/// Barycentric grid on a triangle with integer vertices; coordinates are
/// integer numerators over (resolution - 1), so shared edges coincide exactly.
void add_triangle(const Vertex &a, const Vertex &b, const Vertex &c,
                  int resolution, std::set<SurfacePoint> &out) {
  const int n = resolution - 1;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      const int l = n - i - j;
      std::array<double, 3> x{};
      for (int d = 0; d < 3; ++d)
        x[d] = static_cast<double>(i * a[d] + j * b[d] + l * c[d]) / n;
      if (in_tetrahedron(x[0], x[1], x[2])) out.insert({x[0], x[1], x[2]});
    }
}

double quadratic_height(double x1, double x2) {
  const double s = x1 + x2;
  return 0.25 * s * s - 1.0;
}

}  // namespace

std::string_view to_string(Surface s) {
  switch (s) {
    case Surface::Tetrahedron: return "tetrahedron";
    case Surface::Octahedron: return "octahedron";
    case Surface::Quadratic: return "quadratic";
    case Surface::CdPlanes: return "cd_planes";
    case Surface::ConeSeparable: return "cone_separable";
    case Surface::ConeEad: return "cone_ead";
  }
  return "unknown";
}

Surface surface_from_name(std::string_view name) {
  for (Surface s : {Surface::Tetrahedron, Surface::Octahedron,
                    Surface::Quadratic, Surface::CdPlanes,
                    Surface::ConeSeparable, Surface::ConeEad})
    if (to_string(s) == name) return s;
  throw Error(ErrorCode::InvalidArgument,
              "unknown surface '" + std::string(name) + "'");
}

double surface_residual(Surface s, const BellPoint &p) {
  switch (s) {
    case Surface::Tetrahedron: {
      const auto forms = p.eigenvalue_forms();
      return *std::min_element(forms.begin(), forms.end());
    }
    case Surface::Octahedron:
    case Surface::ConeSeparable:
      return std::abs(p.x1) + std::abs(p.x2) + std::abs(p.x3) - 1.0;
    case Surface::Quadratic:
    case Surface::ConeEad:
      return quadratic_height(p.x1, p.x2) - p.x3;
    case Surface::CdPlanes:
      return std::abs(p.x1 - p.x2) - 2.0;
  }
  return 0.0;
}

std::vector<SurfacePoint> sample_surface(Surface s, int resolution) {
  if (resolution < 2)
    throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");

  std::set<SurfacePoint> points;
  switch (s) {
    case Surface::Tetrahedron:
      for (std::size_t skip = 0; skip < 4; ++skip) {
        std::array<Vertex, 3> face{};
        std::size_t m = 0;
        for (std::size_t v = 0; v < 4; ++v)
          if (v != skip) face[m++] = kTetrahedron[v];
        add_triangle(face[0], face[1], face[2], resolution, points);
      }
      break;
    case Surface::Octahedron:
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
          for (int s3 : {-1, 1})
            add_triangle({s1, 0, 0}, {0, s2, 0}, {0, 0, s3}, resolution,
                         points);
      break;
    case Surface::Quadratic:
    case Surface::ConeEad:
      for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
          const double x1 = grid_value(i, resolution);
          const double x2 = grid_value(j, resolution);
          const double x3 = quadratic_height(x1, x2);
          if (in_tetrahedron(x1, x2, x3)) points.insert({x1, x2, x3});
        }
      break;
    case Surface::CdPlanes:
      for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
          const double x1 = grid_value(i, resolution);
          const double x3 = grid_value(j, resolution);
          for (double x2 : {x1 - 2.0, x1 + 2.0})
            if (in_tetrahedron(x1, x2, x3)) points.insert({x1, x2, x3});
        }
      break;
    case Surface::ConeSeparable:
      for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
          const double x1 = grid_value(i, resolution);
          const double x2 = grid_value(j, resolution);
          const double rest = 1.0 - (std::abs(x1) + std::abs(x2));
          if (rest < 0.0) continue;
          for (double x3 : {-rest, rest})
            if (in_tetrahedron(x1, x2, x3)) points.insert({x1, x2, x3 + 0.0});
        }
      break;
  }
  return {points.begin(), points.end()};
}

}  // namespace esdyn
