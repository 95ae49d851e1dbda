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

#include "esdyn/sampling.hpp"

#include <array>
#include <cmath>

#include "esdyn/classifier.hpp"

namespace esdyn {

namespace {

std::array<double, 4> dirichlet4(Rng &rng) {
  std::array<double, 4> w{};
  double total = 0.0;
  for (double &v : w) total += (v = rng.exponential());
  for (double &v : w) v /= total;
  return w;
}

}  // namespace

BellPoint random_bell_point(Rng &rng) {
  // The eigenvalue forms are the barycentric weights of A, B, C, D.
  const auto w = dirichlet4(rng);
  const double a = w[0], b = w[1], c = w[2], d = w[3];
  return {a - b + c - d, a - b - c + d, -a - b + c + d};
}

BellPoint random_esd_point(Rng &rng, bool negative_x3) {
  for (;;) {
    BellPoint p = random_bell_point(rng);
    if ((p.x3 < 0.0) == negative_x3 &&
        classify_bell_point(p) == DynamicalClass::ESD)
      return p;
  }
}

BellPoint random_ead_point(Rng &rng) {
  for (;;) {
    BellPoint p = random_bell_point(rng);
    if (classify_bell_point(p) == DynamicalClass::EAD) return p;
  }
}

XStateParams random_xstate(Rng &rng) {
  const auto pop = dirichlet4(rng);  // |00>, |01>, |10>, |11>
  const double w = rng.uniform(-1.0, 1.0) * std::sqrt(pop[0] * pop[3]);
  const double z = rng.uniform(-1.0, 1.0) * std::sqrt(pop[1] * pop[2]);
  XStateParams s;
  s[0] = 1.0;
  s[1] = 2.0 * (w + z);
  s[2] = 2.0 * (z - w);
  s[3] = pop[0] - pop[1] - pop[2] + pop[3];
  s[4] = pop[0] - pop[1] + pop[2] - pop[3];
  s[5] = pop[0] + pop[1] - pop[2] - pop[3];
  return s;
}

NonDiagonalParams random_nondiagonal(Rng &rng) {
  NonDiagonalParams p;
  p.x0 = rng.uniform(0.05, 2.0);
  const double fraction = 1.0 - rng.uniform();  // (0, 1]
  p.x1 = (rng.uniform() < 0.5 ? -1.0 : 1.0) * fraction * p.x0;
  p.k = rng.uniform(0.01, 2.0);
  return p;
}

ConePoint random_cone_point(Rng &rng) {
  const BellPoint p = random_bell_point(rng);
  const double x0 = rng.uniform(0.1, 10.0);
  return {x0, x0 * p.x1, x0 * p.x2, x0 * p.x3};
}

}  // namespace esdyn
