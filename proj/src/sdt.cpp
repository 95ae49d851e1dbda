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

#include "esdyn/sdt.hpp"

#include <cmath>
#include <sstream>

#include "esdyn/concurrence.hpp"
#include "esdyn/error.hpp"
#include "esdyn/lorentz.hpp"

namespace esdyn {

namespace {

[[noreturn]] void broken_invariant(const std::string &what) {
  throw Error(ErrorCode::InvalidState, what);
}

}  // namespace

SdtResult sdt_closed_form(const BellPoint &p) {
  SdtResult out{classify_bell_point(p), std::nullopt};
  if (out.kind != DynamicalClass::ESD) return out;

  if (p.x3 < 0.0) {
    const double s = p.x1 + p.x2;
    const double num = -(1.0 + p.x3);
    const double den = std::sqrt(s * s - 4.0 * p.x3) - 2.0;
    // Both are negative everywhere in the ESD region.
    if (!(num < 0.0) || !(den < 0.0)) {
      std::ostringstream os;
      os << "sudden-death time ratio has unexpected signs (" << num << " / "
         << den << ")";
      broken_invariant(os.str());
    }
    out.tau_star = std::log(num / den);
  } else {
    out.tau_star =
        std::log((1.0 + p.x3) / (2.0 - std::abs(p.x1 - p.x2)));
  }
  return out;
}

double sdt_from_quadratic_distances(double d_p, double d_1) {
  if (!(d_p >= 0.0) || !(d_1 > 0.0) || d_p + d_1 > 1.0)
    throw Error(ErrorCode::InvalidArgument,
                "distances outside the ESD region of the x3 < 0 branch");
  // sqrt(1 - a) - 1 == -a / (1 + sqrt(1 - a))
  const double den = -d_1 / (1.0 + std::sqrt(1.0 - d_1));
  const double num =
      0.5 * d_p - (d_p + d_1) / (1.0 + std::sqrt(1.0 - d_p - d_1));
  return std::log(num / den);
}

double sdt_from_plane_distances(double d_p, double d_2) {
  if (!(d_p >= 0.0) || !(d_2 > 0.0))
    throw Error(ErrorCode::InvalidArgument,
                "distances outside the ESD region of the x3 >= 0 branch");
  return std::log1p(d_p / d_2);
}

SdtResult sdt_geometric(const BellPoint &p) {
  const DynamicalClass kind = classify_bell_point(p);
  if (kind != DynamicalClass::ESD) {
    std::ostringstream os;
    os << "point is " << to_string(kind) << ", not ESD";
    throw Error(ErrorCode::NotEsd, os.str());
  }
  const Distances d = distances(p);
  const double tau = p.x3 < 0.0 ? sdt_from_quadratic_distances(d.d_p, d.d_1)
                                : sdt_from_plane_distances(d.d_p, d.d_2);
  return {kind, tau};
}

SdtResult sdt_cone(const ConePoint &c) {
  return sdt_closed_form(normalize_cone_point(c));
}

SdtResult sdt_nondiagonal(double x0, double x1, double k) {
  SdtResult out{classify_nondiagonal(x0, x1, k), std::nullopt};
  if (out.kind != DynamicalClass::ESD) return out;

  const double a = x1 * x1 - x0 * (2.0 * k + x0);
  if (!(a < 0.0)) broken_invariant("leading coefficient must be negative");

  // Substituting y = 1 + u gives a u^2 + b u + x1^2 = 0 with
  // b = 2 x1^2 - 2 k x0. Since a < 0 < x1^2 the roots have opposite signs, so
  // exactly one root y >= 1 exists.
  const double c = x1 * x1;
  const double b = 2.0 * x1 * x1 - 2.0 * k * x0;
  const double root = std::sqrt(b * b - 4.0 * a * c);
  const double u = b <= 0.0 ? 2.0 * c / (root - b) : (b + root) / (-2.0 * a);
  const double other = c / (a * u);
  if (!(u > 0.0) || !(other < 0.0))
    broken_invariant("expected exactly one root y >= 1");
  out.tau_star = std::log1p(u);
  return out;
}

SdtResult sdt_numeric(const std::function<double(double)> &raw_concurrence,
                      double tau_max) {
  if (!(tau_max >= kEadHorizon) || !std::isfinite(tau_max)) {
    std::ostringstream os;
    os << "tau_max must be finite and at least " << kEadHorizon;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  if (!(raw_concurrence(0.0) > 0.0))
    throw Error(ErrorCode::NoInitialEntanglement,
                "raw concurrence is not positive at tau = 0");

  double lo = 0.0;
  double hi = -1.0;
  for (int i = 1; i <= kScanSamples; ++i) {
    const double t = tau_max * i / kScanSamples;
    if (raw_concurrence(t) <= 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi < 0.0) return {DynamicalClass::EAD, std::nullopt};

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    (raw_concurrence(mid) > 0.0 ? lo : hi) = mid;
  }
  return {DynamicalClass::ESD, lo + 0.5 * (hi - lo)};
}

}  // namespace esdyn
