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

#include <cmath>
#include <cstdint>
#include <random>

#include "esdyn/state.hpp"

namespace esdyn {

/// Seedable 64-bit generator (mt19937_64) with platform-independent
/// conversions to doubles, so seeded runs reproduce byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Exponential(1); used for Dirichlet weights.
  double exponential() { return -std::log1p(-uniform()); }

 private:
  std::mt19937_64 engine_;
};

/// Uniform point in the Bell tetrahedron.
BellPoint random_bell_point(Rng &rng);

/// Uniform point conditioned on the dynamical class ESD, on the requested
/// branch (x3 < 0 when `negative_x3`).
BellPoint random_esd_point(Rng &rng, bool negative_x3);

/// Uniform point conditioned on being entangled with EAD dynamics.
BellPoint random_ead_point(Rng &rng);

/// Random normalized physical X-state with real coherences.
XStateParams random_xstate(Rng &rng);

struct NonDiagonalParams {
  double x0 = 1.0;
  double x1 = 0.0;
  double k = 1.0;
};

/// x0 in [0.05, 2], 0 < |x1| <= x0, k in [0.01, 2].
NonDiagonalParams random_nondiagonal(Rng &rng);

/// Random diagonal cone point with x0 in [0.1, 10].
ConePoint random_cone_point(Rng &rng);

}  // namespace esdyn
