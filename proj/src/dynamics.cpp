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

#include "esdyn/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "esdyn/error.hpp"

namespace esdyn {

Tau::Tau(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream os;
    os << "tau must be finite and nonnegative, got " << value;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

XStateParams evolve_xstate(const XStateParams &init, Tau tau) {
  const double t = tau.value();
  if (t == 0.0) return init;

  const double decay = std::exp(-t);       // e^{-tau}
  const double growth = -std::expm1(-t);   // (e^{tau} - 1) e^{-tau}

  XStateParams out;
  out[0] = init[0];
  out[1] = init[1] * decay;
  out[2] = init[2] * decay;
  out[3] = init[0] * growth * growth + init[3] * decay * decay -
           (init[4] + init[5]) * growth * decay;
  out[4] = -init[0] * growth + init[4] * decay;
  out[5] = -init[0] * growth + init[5] * decay;
  return out;
}

XStateParams evolve_bell_point(const BellPoint &p, Tau tau) {
  require_in_tetrahedron(p);
  return evolve_xstate(XStateParams::from_bell_point(p), tau);
}

}  // namespace esdyn
