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

#include <optional>
#include <string>
#include <string_view>

#include "esdyn/state.hpp"

namespace esdyn {

// JSON state files:
//
//   {"kind": "density",    "data": [[[re, im], ...] x4] x4}
//   {"kind": "rmatrix",    "data": [[r00, r01, r02, r03], ...]}
//   {"kind": "bell_point", "data": [x1, x2, x3]}
//   {"kind": "xstate",     "data": [x0, x1, x2, x3, x4, x5]}
//
// Density entries may also be plain numbers (purely real). An optional
// boolean "unnormalized" allows trace != 1. NaN and infinities are rejected.

enum class StateKind { Density, RMatrix, BellPoint, XState };

std::string_view to_string(StateKind k);

struct StateInput {
  StateKind kind = StateKind::RMatrix;
  bool unnormalized = false;
  RMatrix r;
  DensityMatrix density;
  std::optional<BellPoint> bell_point;
  std::optional<XStateParams> xstate;  ///< set when the state is X-shaped
};

/// Throws ParseError on malformed documents and InvalidState /
/// TetrahedronViolation on well-formed but unphysical states.
StateInput parse_state_json(std::string_view text);
StateInput load_state_file(const std::string &path);

std::string state_to_json(const RMatrix &r);
std::string state_to_json(const DensityMatrix &rho);
std::string state_to_json(const BellPoint &p);
std::string state_to_json(const XStateParams &s);

/// 12 significant digits, shortest form, independent of the C locale.
std::string format_number(double value);

}  // namespace esdyn
