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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <functional>

#include "esdyn/concurrence.hpp"
#include "esdyn/error.hpp"
#include "esdyn/sampling.hpp"
#include "esdyn/sdt.hpp"

using namespace esdyn;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ErrorCode code_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an esdyn::Error");
  return ErrorCode::InvalidArgument;
}

const BellPoint kAlpha{-0.5, -0.7, -0.3};
const BellPoint kPlanePoint{0.8, -0.8, 0.8};

// Point with x1 = x2 < 0 at the given distances from the separability plane
// and the quadratic surface.
BellPoint point_at_distances(double d_p, double d_1) {
  const double a = 1.0 - std::sqrt(1.0 - d_p - d_1);
  return {-a, -a, d_1 - 1.0 + a * a};
}

double bell_numeric(const BellPoint &p) {
  return *sdt_numeric([&](double t) { return concurrence_bell_raw(p, Tau(t)); }).tau_star;
}

}  // namespace

TEST_CASE("closed form examples", "[sdt]") {
  const SdtResult a = sdt_closed_form(kAlpha);
  REQUIRE(a.kind == DynamicalClass::ESD);
  CHECK_THAT(*a.tau_star, WithinAbs(0.6236, 1e-4));
  CHECK_THAT(*a.tau_star, WithinAbs(0.624, 1e-3));

  const SdtResult b = sdt_closed_form(kPlanePoint);
  REQUIRE(b.kind == DynamicalClass::ESD);
  CHECK_THAT(*b.tau_star, WithinRel(std::log(4.5), 1e-14));

  const SdtResult s = sdt_closed_form({-1, -1, -1});
  CHECK(s.kind == DynamicalClass::EAD);
  CHECK_FALSE(s.tau_star.has_value());
  CHECK_FALSE(sdt_closed_form({0, 0, 0}).tau_star.has_value());
  CHECK(code_of([] { sdt_closed_form({2, 0, 0}); }) == ErrorCode::TetrahedronViolation);
}

TEST_CASE("geometric form examples", "[sdt]") {
  // ln[(-0.35) / (sqrt(0.66) - 1)]
  const double alpha_by_hand = std::log(-0.35 / (std::sqrt(0.66) - 1.0));
  CHECK_THAT(*sdt_geometric(kAlpha).tau_star, WithinRel(alpha_by_hand, 1e-12));
  CHECK_THAT(*sdt_geometric(kPlanePoint).tau_star, WithinRel(std::log(4.5), 1e-14));
  CHECK_THAT(sdt_from_plane_distances(1.4, 0.4), WithinRel(std::log(4.5), 1e-14));

  double previous = 1.0;
  for (const double eps : {1e-3, 1e-5, 1e-7, 1e-9}) {
    const double t = *sdt_geometric({0.5 + eps, 0.49, -0.01}).tau_star;
    CHECK(t > 0.0);
    CHECK(t < previous);
    previous = t;
  }
  CHECK(previous < 1e-7);

  CHECK(code_of([] { sdt_geometric({-1, -1, -1}); }) == ErrorCode::NotEsd);
  CHECK(code_of([] { sdt_geometric({0, 0, 0}); }) == ErrorCode::NotEsd);
  CHECK(code_of([] { sdt_from_quadratic_distances(0.5, -0.1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { sdt_from_plane_distances(0.5, 0.0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("non-diagonal sudden-death time", "[sdt]") {
  const SdtResult r = sdt_nondiagonal(1.0, 0.8, 0.5);
  REQUIRE(r.kind == DynamicalClass::ESD);
  CHECK_THAT(std::exp(*r.tau_star), WithinAbs(1.7966, 1e-4));
  CHECK_THAT(*r.tau_star, WithinAbs(0.5859, 1e-4));
  // The root satisfies the quadratic in y = exp(tau).
  const double y = std::exp(*r.tau_star);
  CHECK_THAT((0.64 - 2.0) * y * y + 3.0 * y - 1.0, WithinAbs(0.0, 1e-12));

  const SdtResult sep = sdt_nondiagonal(1.0, 0.0, 0.7);
  CHECK(sep.kind == DynamicalClass::Separable);
  CHECK_FALSE(sep.tau_star.has_value());

  double previous = 1.0;
  for (const double x1 : {1e-1, 1e-3, 1e-6, 1e-9}) {
    const double t = *sdt_nondiagonal(1.0, x1, 0.5).tau_star;
    CHECK(t > 0.0);
    CHECK(t < previous);
    previous = t;
  }
  CHECK(previous < 1e-15);
  const double t = *sdt_nondiagonal(1.0, 1e-3, 0.5).tau_star;
  CHECK(concurrence_nondiagonal_raw(1.0, 1e-3, 0.5, Tau(0.5 * t)) > 0.0);
  CHECK(concurrence_nondiagonal_raw(1.0, 1e-3, 0.5, Tau(2.0 * t)) < 0.0);

  CHECK(code_of([] { sdt_nondiagonal(0.5, 0.8, 0.5); }) == ErrorCode::InvalidRepresentative);
}

TEST_CASE("numeric root finding", "[sdt]") {
  CHECK_THAT(bell_numeric(kAlpha), WithinAbs(*sdt_closed_form(kAlpha).tau_star, 1e-10));
  const SdtResult b = sdt_numeric([](double t) { return concurrence_c1_raw({-1, -1, -1}, Tau(t)); });
  CHECK(b.kind == DynamicalClass::EAD);
  CHECK_FALSE(b.tau_star.has_value());
  const SdtResult n = sdt_numeric(
      [](double t) { return concurrence_nondiagonal_raw(1.0, 0.8, 0.5, Tau(t)); });
  CHECK_THAT(*n.tau_star, WithinAbs(*sdt_nondiagonal(1.0, 0.8, 0.5).tau_star, 1e-10));

  CHECK(code_of([] { sdt_numeric([](double) { return 0.0; }); }) ==
        ErrorCode::NoInitialEntanglement);
  CHECK(code_of([] { sdt_numeric([](double) { return 1.0; }, 10.0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("closed, geometric and numeric forms agree", "[sdt][property]") {
  Rng rng(101);
  for (int n = 0; n < 2000; ++n) {
    const BellPoint p = random_esd_point(rng, n % 2 == 0);
    const double closed = *sdt_closed_form(p).tau_star;
    REQUIRE_THAT(*sdt_geometric(p).tau_star, WithinRel(closed, 1e-9));
    REQUIRE_THAT(bell_numeric(p), WithinRel(closed, 1e-9));
  }
  for (int n = 0; n < 300; ++n) {
    const NonDiagonalParams q = random_nondiagonal(rng);
    const double closed = *sdt_nondiagonal(q.x0, q.x1, q.k).tau_star;
    const double numeric = *sdt_numeric([&](double t) {
                              return concurrence_nondiagonal_raw(q.x0, q.x1, q.k, Tau(t));
                            }).tau_star;
    REQUIRE_THAT(numeric, WithinRel(closed, 1e-9));
  }
}

TEST_CASE("distance parameterization reproduces the closed form", "[sdt]") {
  const BellPoint p = point_at_distances(0.5, 0.34);
  CHECK_THAT(distances(p).d_p, WithinAbs(0.5, 1e-14));
  CHECK_THAT(distances(p).d_1, WithinAbs(0.34, 1e-14));
  CHECK_THAT(*sdt_closed_form(p).tau_star, WithinRel(*sdt_closed_form(kAlpha).tau_star, 1e-12));
  CHECK_THAT(sdt_from_quadratic_distances(0.5, 0.34),
             WithinRel(*sdt_closed_form(kAlpha).tau_star, 1e-12));
}

TEST_CASE("limit laws", "[sdt]") {
  // Approaching the quadratic surface the death time grows without bound.
  double previous = 0.0;
  bool crossed = false;
  for (int k = 1; k <= 17; ++k) {
    const double d_1 = std::pow(10.0, -k);
    const double t = sdt_from_quadratic_distances(0.5, d_1);
    CHECK(t > previous);
    previous = t;
    crossed = crossed || t > 20.0;
    if (k <= 6) {
      const BellPoint p = point_at_distances(0.5, d_1);
      CHECK_THAT(*sdt_closed_form(p).tau_star, WithinRel(t, 1e-6));
    }
  }
  CHECK(crossed);

  // Approaching the separability plane it vanishes.
  previous = 1e300;
  for (int k = 1; k <= 8; ++k) {
    const double t = sdt_from_quadratic_distances(std::pow(10.0, -k), 0.34);
    CHECK(t > 0.0);
    CHECK(t < previous);
    previous = t;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("branches meet near x3 = 0", "[sdt]") {
  const double d = 1e-6;
  const double below = *sdt_closed_form({0.5, 0.5 + 0.5 * d, -d}).tau_star;
  const double above = *sdt_closed_form({0.5 + 0.5 * d, -0.5, d}).tau_star;
  CHECK(below > 0.0);
  CHECK(above > 0.0);
  CHECK(below < 1e-5);
  CHECK(above < 1e-5);
  CHECK_THAT(below, WithinAbs(above, 1e-5));
}

TEST_CASE("death time is scale invariant on the cone", "[sdt][property]") {
  Rng rng(103);
  int esd = 0;
  for (int n = 0; n < 1000; ++n) {
    const ConePoint c = random_cone_point(rng);
    const SdtResult base = sdt_cone(c);
    esd += base.kind == DynamicalClass::ESD;
    for (const double s : {0.1, 3.0, 42.0}) {
      const SdtResult scaled = sdt_cone({s * c.x0, s * c.x1, s * c.x2, s * c.x3});
      REQUIRE(scaled.kind == base.kind);
      REQUIRE(scaled.tau_star.has_value() == base.tau_star.has_value());
      if (base.tau_star) REQUIRE_THAT(*scaled.tau_star, WithinRel(*base.tau_star, 1e-10));
    }
  }
  CHECK(esd > 100);
}
