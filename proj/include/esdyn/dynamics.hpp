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

#include "esdyn/state.hpp"

namespace esdyn {

/// Dimensionless time gamma * t. Finite and nonnegative.
class Tau {
 public:
  Tau() = default;
  explicit Tau(double value);

  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

/// Closed-form evolution of X-state parameters under two independent vacuum
/// baths.
XStateParams evolve_xstate(const XStateParams &init, Tau tau);

/// Bell-diagonal initial condition (X0 = 1, X4 = X5 = 0).
XStateParams evolve_bell_point(const BellPoint &p, Tau tau);

}  // namespace esdyn
