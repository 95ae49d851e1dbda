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

// Acceptance suite. Each criterion prints one PASS or FAIL line; the process
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "esdyn/classifier.hpp"
#include "esdyn/concurrence.hpp"
#include "esdyn/dynamics.hpp"
#include "esdyn/geometry.hpp"
#include "esdyn/lindblad.hpp"
#include "esdyn/lorentz.hpp"
#include "esdyn/sampling.hpp"
#include "esdyn/sdt.hpp"

using namespace esdyn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string &why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::pair<int, std::string> run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// 1. Sudden-death time of the point alpha.
Outcome alpha_sdt() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto [code, out] = run_cli({"classify", "--point", "-0.5,-0.7,-0.3"});
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  o.require(code == 0, "classify exited with " + std::to_string(code));
  o.require(out.rfind("class=ESD ", 0) == 0, "class is not ESD: " + out);
  const auto pos = out.find("gamma_t=");
  o.require(pos != std::string::npos, "no gamma_t in output");
  if (!o.pass) return o;
  const double t = std::stod(out.substr(pos + 8));
  o.require(std::abs(t - 0.624) <= 1e-3, "gamma_t=" + fmt(t));
  o.require(ms < 1.0, "command took " + fmt(ms) + " ms");
  o.detail = "gamma_t=" + fmt(t) + ", command " + fmt(ms) + " ms";
  return o;
}

// 2. Normal form of the worked example and the fate of the original state.
Outcome worked_example() {
  Outcome o;
  const XStateParams fix{{1, -0.25, -0.25, -0.5, -0.24, -0.24}};
  const NormalForm nf = lorentz_normal_form(fix.to_r());
  o.require(nf.kind == NormalFormClass::Diagonal, "normal form is not diagonal");
  const BellPoint p = nf.bell_point();
  o.require(std::abs(p.x1 + 0.304878) <= 1e-5 && std::abs(p.x2 + 0.304878) <= 1e-5 &&
                std::abs(p.x3 + 0.829268) <= 1e-5,
            "normal form (" + fmt(p.x1) + ", " + fmt(p.x2) + ", " + fmt(p.x3) + ")");
  o.require(classify_bell_point(p) == DynamicalClass::ESD, "representative is not ESD");

  const DeathScan scan = scan_for_death(xstate_to_density(fix), Tau(60.0), IntegratorConfig{}, 1);
  o.require(scan.verdict == DeathScan::Verdict::NoDeath,
            "original state reaches zero concurrence at gamma_t=" + fmt(scan.tau));
  o.require(scan.min_scaled_raw > 0.0, "raw concurrence not strictly positive");
  if (o.pass)
    o.detail = "diag(1, " + fmt(p.x1) + ", " + fmt(p.x2) + ", " + fmt(p.x3) +
               "), min e^t C_raw on (0, 60] = " + fmt(scan.min_scaled_raw);
  return o;
}

// 3. Singlet concurrence follows exp(-gamma t).
Outcome singlet_law() {
  Outcome o;
  const XStateParams singlet{{1, -1, -1, -1, 0, 0}};
  const int samples = 50;
  const double tau_max = 5.0;
  double analytic_err = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = tau_max * i / (samples - 1);
    const double c = std::max(0.0, x_state_concurrence_raw(evolve_xstate(singlet, Tau(t))));
    analytic_err = std::max(analytic_err, std::abs(c - std::exp(-t)));
  }
  double oracle_err = 0.0;
  const auto traj = concurrence_trajectory(xstate_to_density(singlet), Tau(tau_max), samples);
  for (const auto &s : traj) oracle_err = std::max(oracle_err, std::abs(s.concurrence - std::exp(-s.tau)));
  o.require(traj.size() == static_cast<std::size_t>(samples), "wrong sample count");
  o.require(analytic_err <= 1e-7, "analytic error " + fmt(analytic_err));
  o.require(oracle_err <= 1e-6, "oracle error " + fmt(oracle_err));
  if (o.pass) o.detail = "max error analytic " + fmt(analytic_err) + ", oracle " + fmt(oracle_err);
  return o;
}

// 4. Analytic evolution agrees with the integrated master equation.
Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(2024);
  const std::vector<double> taus{0.1, 0.5, 1.0, 2.0, 5.0};
  double state_err = 0.0;
  double conc_err = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const XStateParams s = random_xstate(rng);
    const auto rk4 = integrate_checkpoints(xstate_to_density(s), taus);
    for (std::size_t j = 0; j < taus.size(); ++j) {
      const XStateParams e = evolve_xstate(s, Tau(taus[j]));
      state_err = std::max(state_err,
                           (xstate_to_density(e).matrix() - rk4[j].matrix()).cwiseAbs().maxCoeff());
      conc_err = std::max(conc_err, std::abs(std::max(0.0, x_state_concurrence_raw(e)) -
                                             wootters_concurrence(rk4[j])));
    }
  }
  o.require(state_err <= 1e-7, "state error " + fmt(state_err));
  o.require(conc_err <= 1e-6, "concurrence error " + fmt(conc_err));
  if (o.pass) o.detail = "max state error " + fmt(state_err) + ", concurrence " + fmt(conc_err);
  return o;
}

// 5. Closed, geometric and numeric death times coincide.
Outcome formula_equivalence() {
  Outcome o;
  Rng rng(5);
  double worst = 0.0;
  for (int n = 0; n < 10000 && o.pass; ++n) {
    const BellPoint p = random_esd_point(rng, n % 2 == 0);
    const auto closed = sdt_closed_form(p).tau_star;
    const auto geometric = sdt_geometric(p).tau_star;
    const auto numeric =
        sdt_numeric([&](double t) { return concurrence_bell_raw(p, Tau(t)); }).tau_star;
    o.require(closed && geometric && numeric, "missing death time");
    if (!o.pass) break;
    worst = std::max({worst, relative_gap(*closed, *geometric), relative_gap(*closed, *numeric)});
  }
  for (int n = 0; n < 1000 && o.pass; ++n) {
    const NonDiagonalParams q = random_nondiagonal(rng);
    const auto closed = sdt_nondiagonal(q.x0, q.x1, q.k).tau_star;
    const auto numeric = sdt_numeric([&](double t) {
                           return concurrence_nondiagonal_raw(q.x0, q.x1, q.k, Tau(t));
                         }).tau_star;
    o.require(closed && numeric, "missing non-diagonal death time");
    if (!o.pass) break;
    worst = std::max(worst, relative_gap(*closed, *numeric));
  }
  o.require(worst <= 1e-9, "relative gap " + fmt(worst));
  if (o.pass) o.detail = "max relative gap " + fmt(worst);
  return o;
}

// 6. Partition of the tetrahedron and boundary semantics.
Outcome partition() {
  Outcome o;
  Rng rng(6);
  long counts[3] = {0, 0, 0};
  long peres_checked = 0;
  for (int n = 0; n < 100000 && o.pass; ++n) {
    const BellPoint p = random_bell_point(rng);
    const DynamicalClass c = classify_bell_point(p);
    const int k = static_cast<int>(c);
    o.require(k >= 0 && k < 3, "class outside the partition");
    ++counts[k];
    const double l1 = std::abs(p.x1) + std::abs(p.x2) + std::abs(p.x3);
    if (std::abs(l1 - 1.0) > 1e-9) {
      const Matrix4c pt = partial_transpose(bell_point_to_density(p).matrix());
      const bool entangled = Eigen::SelfAdjointEigenSolver<Matrix4c>(pt).eigenvalues()(0) < 0.0;
      o.require(entangled == (c != DynamicalClass::Separable), "disagrees with the Peres test");
      ++peres_checked;
    }
    if (p.x3 >= 0.0 && c == DynamicalClass::EAD)
      o.require(std::abs(std::abs(p.x1 - p.x2) - 2.0) <= 1e-12, "EAD point with x3 >= 0 away from C, D");
  }

  long quadratic = 0;
  for (int n = 0; n < 10000; ++n) {
    const double x1 = rng.uniform(-1.0, 1.0);
    const double x2 = rng.uniform(-1.0, 1.0);
    const double x3 = 0.25 * (x1 + x2) * (x1 + x2) - 1.0;
    if (!in_tetrahedron(x1, x2, x3) || is_separable_bell({x1, x2, x3})) continue;
    ++quadratic;
    o.require(classify_bell_point({x1, x2, x3}) == DynamicalClass::EAD, "quadratic-surface point not EAD");
  }
  for (const SurfacePoint &sp : sample_surface(Surface::Quadratic, 201))
    if (!is_separable_bell(sp.bell_point()))
      o.require(classify_bell_point(sp.bell_point()) == DynamicalClass::EAD, "quadratic grid point not EAD");

  long octahedron = 0;
  for (int n = 0; n < 10000; ++n) {
    double w[3];
    double sum = 0.0;
    for (double &x : w) sum += (x = rng.exponential());
    const BellPoint p{(rng.uniform() < 0.5 ? -1 : 1) * w[0] / sum, (rng.uniform() < 0.5 ? -1 : 1) * w[1] / sum,
                      (rng.uniform() < 0.5 ? -1 : 1) * w[2] / sum};
    ++octahedron;
    o.require(classify_bell_point(p) == DynamicalClass::Separable, "octahedron point not separable");
  }
  for (const SurfacePoint &sp : sample_surface(Surface::Octahedron, 101))
    o.require(classify_bell_point(sp.bell_point()) == DynamicalClass::Separable, "octahedron grid point not separable");

  o.require(classify_bell_point({1, -1, 1}) == DynamicalClass::EAD, "C is not EAD");
  o.require(classify_bell_point({-1, 1, 1}) == DynamicalClass::EAD, "D is not EAD");
  o.require(classify_bell_point({1 - 1e-9, -1 + 1e-9, 1 - 2e-9}) == DynamicalClass::ESD,
            "point next to C is not ESD");

  if (o.pass)
    o.detail = "separable " + std::to_string(counts[0]) + ", ESD " + std::to_string(counts[1]) + ", EAD " +
               std::to_string(counts[2]) + "; " + std::to_string(peres_checked) + " Peres checks, " +
               std::to_string(quadratic) + " quadratic and " + std::to_string(octahedron) + " octahedron samples";
  return o;
}

// 7. Every entangled non-diagonal representative dies in finite time.
Outcome nondiagonal_all_esd() {
  Outcome o;
  Rng rng(7);
  double worst = 0.0;
  for (int n = 0; n < 1000 && o.pass; ++n) {
    const NonDiagonalParams q = random_nondiagonal(rng);
    o.require(q.x1 != 0.0 && q.k > 0.0, "bad sample");
    o.require(classify_nondiagonal(q.x0, q.x1, q.k) == DynamicalClass::ESD, "representative not ESD");
    const auto t = sdt_nondiagonal(q.x0, q.x1, q.k).tau_star;
    o.require(t && std::isfinite(*t) && *t > 0.0, "no finite positive death time");
    if (!o.pass) break;

    // Bisection on the Wootters concurrence of the evolved representative.
    const XStateParams rep = nondiagonal_representative(q.x0, q.x1, q.k);
    const auto c = [&](double tau) {
      return wootters_concurrence_raw(density_from_r(evolve_xstate(rep, Tau(tau)).to_r(), true));
    };
    double lo = 0.0;
    double hi = 1.0;
    while (c(hi) > 0.0) hi *= 2.0;
    while (hi - lo > 1e-13 * hi) {
      const double mid = 0.5 * (lo + hi);
      (c(mid) > 0.0 ? lo : hi) = mid;
    }
    const double err = std::abs(0.5 * (lo + hi) - *t);
    worst = std::max(worst, err);
    o.require(err <= 1e-9, "bisection disagrees by " + fmt(err));
  }
  if (o.pass) o.detail = "max |closed - bisection| " + fmt(worst);
  return o;
}

// 8. Limits of the death time near the two boundaries.
Outcome limit_laws() {
  Outcome o;
  const double d_p = 0.5;
  double previous = 0.0;
  double crossing = -1.0;
  for (int k = 1; k <= 17; ++k) {
    const double d_1 = std::pow(10.0, -k);
    const double t = sdt_from_quadratic_distances(d_p, d_1);
    o.require(t > previous, "not increasing towards the quadratic surface");
    previous = t;
    if (crossing < 0.0 && t > 20.0) crossing = d_1;
  }
  o.require(crossing > 1e-17, "death time never exceeds 20");

  const double t_small = sdt_from_quadratic_distances(1e-8, 0.34);
  previous = 1e300;
  for (int k = 1; k <= 8; ++k) {
    const double t = sdt_from_quadratic_distances(std::pow(10.0, -k), 0.34);
    o.require(t > 0.0 && t < previous, "not decreasing towards the separable plane");
    previous = t;
  }
  o.require(t_small < 1e-8, "death time at D_P = 1e-8 is " + fmt(t_small));
  if (o.pass)
    o.detail = "gamma_t* > 20 from D_1 = " + fmt(crossing) + "; gamma_t*(D_P = 1e-8) = " + fmt(t_small);
  return o;
}

// 9. Classification and death time depend only on the normalized point.
Outcome scaling_invariance() {
  Outcome o;
  Rng rng(9);
  double worst = 0.0;
  int esd = 0;
  for (int n = 0; n < 1000 && o.pass; ++n) {
    const ConePoint c = random_cone_point(rng);
    const DynamicalClass cls = classify_cone_point(c);
    const SdtResult base = sdt_cone(c);
    esd += cls == DynamicalClass::ESD;
    for (const double s : {0.1, 3.0, 42.0}) {
      const ConePoint scaled{s * c.x0, s * c.x1, s * c.x2, s * c.x3};
      o.require(classify_cone_point(scaled) == cls, "class changes under scaling");
      const SdtResult r = sdt_cone(scaled);
      o.require(r.tau_star.has_value() == base.tau_star.has_value(), "death time appears under scaling");
      if (r.tau_star && base.tau_star) worst = std::max(worst, relative_gap(*r.tau_star, *base.tau_star));
    }
  }
  o.require(worst <= 1e-10, "relative change " + fmt(worst));
  if (o.pass) o.detail = std::to_string(esd) + " ESD points, max relative change " + fmt(worst);
  return o;
}

// 10. Reports and sweeps are byte-identical across runs.
Outcome determinism() {
  Outcome o;
  const auto v1 = run_cli({"verify", "--seed", "7"});
  const auto v2 = run_cli({"verify", "--seed", "7"});
  o.require(v1.first == 0, "verify failed:\n" + v1.second);
  o.require(v1.second == v2.second, "verify reports differ");
  const auto s1 = run_cli({"sweep", "--grid", "51"});
  const auto s2 = run_cli({"sweep", "--grid", "51"});
  o.require(s1.first == 0, "sweep failed");
  o.require(s1.second == s2.second, "sweep output differs");
  if (o.pass)
    o.detail = "verify report " + std::to_string(v1.second.size()) + " bytes, sweep " +
               std::to_string(s1.second.size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "alpha sudden-death time", 1.0, alpha_sdt},
      {2, "worked normal form and original-state fate", 1.0, worked_example},
      {3, "singlet concurrence law", 5.0, singlet_law},
      {4, "analytic vs master-equation oracle", 60.0, oracle_equivalence},
      {5, "death-time formula equivalence", 120.0, formula_equivalence},
      {6, "partition and boundary semantics", 30.0, partition},
      {7, "non-diagonal representatives are ESD", 10.0, nondiagonal_all_esd},
      {8, "death-time limit laws", 1.0, limit_laws},
      {9, "scaling invariance on the cone", 10.0, scaling_invariance},
      {10, "deterministic reports", 60.0, determinism},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.body();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail = "took " + fmt(seconds) + " s, limit " + fmt(c.limit_seconds) + " s";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s (%s; %.3f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                o.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
