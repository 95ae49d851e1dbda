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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "esdyn/classifier.hpp"
#include "esdyn/concurrence.hpp"
#include "esdyn/dynamics.hpp"
#include "esdyn/error.hpp"
#include "esdyn/geometry.hpp"
#include "esdyn/lindblad.hpp"
#include "esdyn/lorentz.hpp"
#include "esdyn/sampling.hpp"
#include "esdyn/sdt.hpp"
#include "esdyn/state_io.hpp"

namespace esdyn::cli {

namespace {

using esdyn::format_number;

std::vector<double> parse_numbers(const std::string &text, std::size_t count,
                                  const std::string &flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const char *first = text.data() + start;
    const char *last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
      throw Error(ErrorCode::ParseError,
                  flag + " expects " + std::to_string(count) +
                      " comma-separated numbers, got '" + text + "'");
    values.push_back(v);
    start = end + 1;
  }
  if (values.size() != count)
    throw Error(ErrorCode::ParseError,
                flag + " expects " + std::to_string(count) +
                    " comma-separated numbers, got '" + text + "'");
  return values;
}

BellPoint parse_point(const std::string &text) {
  const auto v = parse_numbers(text, 3, "--point");
  return {v[0], v[1], v[2]};
}

ConePoint parse_cone(const std::string &text) {
  const auto v = parse_numbers(text, 4, "--cone");
  return {v[0], v[1], v[2], v[3]};
}

void emit(const std::string &text, const std::string &path,
          std::ostream &out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

// ---------------------------------------------------------------- classify

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, double value) {
    fields.emplace_back(std::move(key), format_number(value));
  }

  std::string text() const {
    std::string line;
    for (const auto &[k, v] : fields) {
      if (!line.empty()) line += ' ';
      line += k + '=' + v;
    }
    return line + '\n';
  }

  std::string json() const {
    nlohmann::ordered_json j;
    for (const auto &[k, v] : fields) {
      double d = 0.0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
      if (ec == std::errc() && ptr == v.data() + v.size())
        j[k] = d;
      else
        j[k] = v;
    }
    return j.dump() + '\n';
  }
};

void describe_bell_point(const BellPoint &p, Report &r) {
  require_in_tetrahedron(p);
  const SdtResult sdt = sdt_closed_form(p);
  r.add("class", std::string(to_string(sdt.kind)));
  if (sdt.tau_star) r.add("gamma_t", *sdt.tau_star);
  if (sdt.kind == DynamicalClass::Separable) return;
  const Distances d = distances(p);
  r.add("d_p", d.d_p);
  if (p.x3 < 0.0)
    r.add("d_1", d.d_1);
  else
    r.add("d_2", d.d_2);
}

void describe_normal_form(const NormalForm &nf, Report &r) {
  r.add("normal_form", std::string(to_string(nf.kind)));
  switch (nf.kind) {
    case NormalFormClass::Apex:
      r.add("class", std::string(to_string(DynamicalClass::Separable)));
      break;
    case NormalFormClass::Diagonal:
      describe_bell_point(nf.bell_point(), r);
      break;
    case NormalFormClass::NonDiagonal: {
      const SdtResult sdt = sdt_nondiagonal(nf.x0, nf.x1, nf.k);
      r.add("class", std::string(to_string(sdt.kind)));
      if (sdt.tau_star) r.add("gamma_t", *sdt.tau_star);
      break;
    }
  }
}

// ------------------------------------------------------------------ verify

struct SuiteResult {
  std::string name;
  bool pass = true;
  long checks = 0;
  std::vector<std::pair<std::string, double>> metrics;
  std::string first_failure;

  void fail(const std::string &why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "oracle_equivalence";
  Rng rng(seed);
  const std::vector<double> taus{0.1, 0.5, 1.0, 2.0, 5.0};
  double max_state = 0.0;
  double max_conc = 0.0;
  for (int i = 0; i < count; ++i) {
    const XStateParams init = random_xstate(rng);
    const auto oracle = integrate_checkpoints(xstate_to_density(init), taus);
    for (std::size_t j = 0; j < taus.size(); ++j) {
      const XStateParams exact = evolve_xstate(init, Tau(taus[j]));
      const Matrix4c diff =
          xstate_to_density(exact).matrix() - oracle[j].matrix();
      max_state = std::max(max_state, diff.cwiseAbs().maxCoeff());
      const double closed = std::max(0.0, x_state_concurrence_raw(exact));
      max_conc = std::max(
          max_conc, std::abs(closed - wootters_concurrence(oracle[j])));
      ++s.checks;
    }
  }
  s.metrics = {{"max_state_diff", max_state}, {"max_concurrence_diff", max_conc}};
  if (!(max_state <= 1e-7)) s.fail("state difference above 1e-7");
  if (!(max_conc <= 1e-6)) s.fail("concurrence difference above 1e-6");
  return s;
}

SuiteResult suite_formula_equivalence(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "formula_equivalence";
  Rng rng(seed + 1);
  double max_gap = 0.0;
  auto check = [&](double a, double b, double c, const std::string &what) {
    const double gap = std::max(relative_gap(a, b), relative_gap(a, c));
    max_gap = std::max(max_gap, gap);
    ++s.checks;
    if (!(gap <= 1e-9)) s.fail(what + " sudden-death times disagree");
  };
  for (int i = 0; i < 2 * count; ++i) {
    const BellPoint p = random_esd_point(rng, i % 2 == 0);
    const auto closed = sdt_closed_form(p).tau_star;
    const auto geometric = sdt_geometric(p).tau_star;
    const auto numeric = sdt_numeric([&](double t) {
                           return concurrence_bell_raw(p, Tau(t));
                         }).tau_star;
    if (!closed || !geometric || !numeric) {
      s.fail("Bell-diagonal ESD point without a finite sudden-death time");
      continue;
    }
    check(*closed, *geometric, *numeric, "Bell-diagonal");
  }
  for (int i = 0; i < count; ++i) {
    const NonDiagonalParams q = random_nondiagonal(rng);
    const auto closed = sdt_nondiagonal(q.x0, q.x1, q.k).tau_star;
    const auto numeric = sdt_numeric([&](double t) {
                           return concurrence_nondiagonal_raw(q.x0, q.x1, q.k,
                                                              Tau(t));
                         }).tau_star;
    const auto oracle = sdt_numeric([&](double t) {
                          return x_state_concurrence_raw(evolve_xstate(
                              nondiagonal_representative(q.x0, q.x1, q.k),
                              Tau(t)));
                        }).tau_star;
    if (!closed || !numeric || !oracle) {
      s.fail("non-diagonal representative without a finite sudden-death time");
      continue;
    }
    check(*closed, *numeric, *oracle, "non-diagonal");
  }
  s.metrics = {{"max_relative_gap", max_gap}};
  return s;
}

SuiteResult suite_partition(std::uint64_t seed, int count) {
  SuiteResult s;
  s.name = "partition";
  Rng rng(seed + 2);
  long counts[3] = {0, 0, 0};
  for (int i = 0; i < 100 * count; ++i) {
    const BellPoint p = random_bell_point(rng);
    const DynamicalClass c = classify_bell_point(p);
    ++counts[static_cast<int>(c)];
    ++s.checks;
    const bool separable = is_separable_bell(p);
    if (separable != (c == DynamicalClass::Separable))
      s.fail("separability disagrees with the classifier");
    if (p.x3 >= 0.0 && c == DynamicalClass::EAD &&
        std::abs(std::abs(p.x1 - p.x2) - 2.0) > 1e-12)
      s.fail("EAD point with x3 >= 0 away from the vertices C and D");
  }
  for (const Surface surf : {Surface::Quadratic, Surface::Octahedron,
                             Surface::CdPlanes}) {
    for (const SurfacePoint &sp : sample_surface(surf, 41)) {
      const BellPoint p = sp.bell_point();
      const DynamicalClass c = classify_bell_point(p);
      ++s.checks;
      if (surf == Surface::Octahedron && c != DynamicalClass::Separable)
        s.fail("octahedron boundary point not separable");
      if (surf == Surface::Quadratic && !is_separable_bell(p) &&
          c != DynamicalClass::EAD)
        s.fail("entangled quadratic-surface point not EAD");
      if (surf == Surface::CdPlanes && !is_separable_bell(p) &&
          c != DynamicalClass::EAD)
        s.fail("entangled point on |x1 - x2| = 2 not EAD");
    }
  }
  s.metrics = {{"separable", static_cast<double>(counts[0])},
               {"esd", static_cast<double>(counts[1])},
               {"ead", static_cast<double>(counts[2])}};
  return s;
}

// ---------------------------------------------------------------- commands

int cmd_classify(const std::string &point, const std::string &cone,
                 const std::string &state, bool json, std::ostream &out) {
  const int given = !point.empty() + !cone.empty() + !state.empty();
  if (given != 1)
    throw Error(ErrorCode::InvalidArgument,
                "classify needs exactly one of --point, --cone, --state");
  Report r;
  if (!point.empty()) {
    describe_bell_point(parse_point(point), r);
  } else if (!cone.empty()) {
    const ConePoint c = parse_cone(cone);
    describe_bell_point(normalize_cone_point(c), r);
  } else {
    const StateInput in = load_state_file(state);
    if (in.bell_point)
      describe_bell_point(*in.bell_point, r);
    else
      describe_normal_form(lorentz_normal_form(in.r), r);
  }
  out << (json ? r.json() : r.text());
  return kOk;
}

struct EvolveOptions {
  std::string state;
  std::string point;
  double tau = 1.0;
  int samples = 11;
  bool oracle = false;
  double step = 1e-3;
  std::string out_path;
};

int cmd_evolve(const EvolveOptions &o, std::ostream &out) {
  if (o.state.empty() == o.point.empty())
    throw Error(ErrorCode::InvalidArgument,
                "evolve needs exactly one of --state, --point");
  if (o.samples < 2)
    throw Error(ErrorCode::InvalidArgument, "--samples must be at least 2");
  const Tau tau_max(o.tau);

  StateInput in;
  if (!o.point.empty()) {
    const BellPoint p = parse_point(o.point);
    require_in_tetrahedron(p);
    in.kind = StateKind::BellPoint;
    in.bell_point = p;
    in.xstate = XStateParams::from_bell_point(p);
    in.density = bell_point_to_density(p);
    in.r = in.xstate->to_r();
  } else {
    in = load_state_file(o.state);
  }

  std::vector<double> taus(o.samples);
  for (int i = 0; i < o.samples; ++i)
    taus[i] = i + 1 == o.samples ? tau_max.value()
                                 : tau_max.value() * i / (o.samples - 1);

  std::ostringstream csv;
  if (!o.oracle) {
    if (!in.xstate)
      throw Error(ErrorCode::InvalidState,
                  "analytic evolution needs an X-shaped state; use --oracle");
    csv << "tau,x0,x1,x2,x3,x4,x5,concurrence\n";
    for (const double t : taus) {
      const XStateParams s = evolve_xstate(*in.xstate, Tau(t));
      csv << format_number(t);
      for (const double v : s.x) csv << ',' << format_number(v);
      csv << ',' << format_number(std::max(0.0, x_state_concurrence_raw(s)))
          << '\n';
    }
  } else {
    const IntegratorConfig cfg{o.step};
    cfg.validate();
    const auto states = integrate_checkpoints(in.density, taus, cfg);
    csv << "tau,concurrence\n";
    double max_diff = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      csv << format_number(taus[i]) << ','
          << format_number(wootters_concurrence(states[i])) << '\n';
      if (in.xstate) {
        const Matrix4c exact =
            xstate_to_density(evolve_xstate(*in.xstate, Tau(taus[i]))).matrix();
        max_diff = std::max(
            max_diff, (exact - states[i].matrix()).cwiseAbs().maxCoeff());
      }
    }
    if (in.xstate) csv << "# max_abs_diff=" << format_number(max_diff) << '\n';
  }
  emit(csv.str(), o.out_path, out);
  return kOk;
}

struct SweepOptions {
  int grid = 0;
  std::string slice;
  std::string branch = "all";
  std::string out_path;
};

int cmd_sweep(const SweepOptions &o, std::ostream &out) {
  if (o.grid < 2 || o.grid > 401)
    throw Error(ErrorCode::InvalidArgument, "--grid must be in [2, 401]");
  if (o.branch != "all" && o.branch != "c1" && o.branch != "c2")
    throw Error(ErrorCode::InvalidArgument, "--branch must be all, c1 or c2");

  const int n = o.grid;
  std::vector<double> axis(n);
  for (int i = 0; i < n; ++i)
    axis[i] = static_cast<double>(2 * i - (n - 1)) / (n - 1);
  std::vector<double> axes[3] = {axis, axis, axis};

  if (!o.slice.empty()) {
    const auto eq = o.slice.find('=');
    const std::string name = o.slice.substr(0, std::min(eq, o.slice.size()));
    int which = -1;
    if (name == "x1") which = 0;
    if (name == "x2") which = 1;
    if (name == "x3") which = 2;
    if (eq == std::string::npos || which < 0)
      throw Error(ErrorCode::ParseError,
                  "--slice expects axis=value with axis x1, x2 or x3");
    axes[which] = parse_numbers(o.slice.substr(eq + 1), 1, "--slice");
  }

  std::ostringstream csv;
  csv << "x1,x2,x3,class,gamma_t,d_p,d_1,d_2\n";
  for (const double x1 : axes[0]) {
    for (const double x2 : axes[1]) {
      for (const double x3 : axes[2]) {
        if (!in_tetrahedron(x1, x2, x3)) continue;
        if (o.branch == "c1" && !(x3 < 0.0)) continue;
        if (o.branch == "c2" && x3 < 0.0) continue;
        const BellPoint p{x1, x2, x3};
        const SdtResult sdt = sdt_closed_form(p);
        const Distances d = distances(p);
        csv << format_number(x1) << ',' << format_number(x2) << ','
            << format_number(x3) << ',' << to_string(sdt.kind) << ','
            << (sdt.tau_star ? format_number(*sdt.tau_star) : std::string())
            << ',' << format_number(d.d_p) << ',' << format_number(d.d_1)
            << ',' << format_number(d.d_2) << '\n';
      }
    }
  }
  emit(csv.str(), o.out_path, out);
  return kOk;
}

std::string format_diag(const NormalForm &nf) {
  std::ostringstream os;
  os.precision(6);
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(6);
    s << (v == 0.0 ? 0.0 : v);
    return s.str();
  };
  switch (nf.kind) {
    case NormalFormClass::Apex:
      os << "apex (all singular values zero)";
      break;
    case NormalFormClass::Diagonal: {
      const BellPoint p = nf.bell_point();
      os << "diag(1, " << num(p.x1) << ", " << num(p.x2) << ", " << num(p.x3)
         << ')';
      break;
    }
    case NormalFormClass::NonDiagonal:
      os << "nondiag(x0=" << num(nf.x0) << ", x1=" << num(nf.x1)
         << ", k=" << num(nf.k) << ')';
      break;
  }
  return os.str();
}

int cmd_normal_form(const std::string &state, bool classify,
                    std::ostream &out) {
  if (state.empty())
    throw Error(ErrorCode::InvalidArgument, "normal-form needs --state");
  const StateInput in = load_state_file(state);
  const NormalForm nf = lorentz_normal_form(in.r);
  out << "normal_form=" << to_string(nf.kind) << '\n' << format_diag(nf) << '\n';

  Report r;
  describe_normal_form(nf, r);
  out << "representative: " << r.text();

  if (classify) {
    const DeathScan scan =
        scan_for_death(in.density, Tau(kEadHorizon), IntegratorConfig{});
    out << "original state: ";
    switch (scan.verdict) {
      case DeathScan::Verdict::NotEntangled:
        out << "not entangled at tau=0\n";
        break;
      case DeathScan::Verdict::Death:
        out << "concurrence reaches zero by gamma_t=" << format_number(scan.tau)
            << '\n';
        break;
      case DeathScan::Verdict::NoDeath:
        out << "no finite death time detected up to gamma_t="
            << format_number(kEadHorizon) << '\n';
        break;
    }
  }
  return kOk;
}

int cmd_verify(std::uint64_t seed, int count, std::ostream &out) {
  if (count < 1)
    throw Error(ErrorCode::InvalidArgument, "--count must be positive");
  out << "esdyn verify seed=" << seed << " count=" << count << '\n';
  const std::vector<std::function<SuiteResult()>> suites{
      [&] { return suite_oracle_equivalence(seed, count); },
      [&] { return suite_formula_equivalence(seed, count); },
      [&] { return suite_partition(seed, count); },
  };
  bool all = true;
  for (const auto &run_suite : suites) {
    const SuiteResult s = run_suite();
    all = all && s.pass;
    out << s.name << ": " << (s.pass ? "pass" : "FAIL") << " checks=" << s.checks;
    for (const auto &[k, v] : s.metrics) out << ' ' << k << '=' << format_number(v);
    if (!s.pass) out << " first_failure=\"" << s.first_failure << '"';
    out << '\n';
  }
  out << (all ? "all suites passed" : "verification FAILED") << '\n';
  return all ? kOk : kVerificationFailed;
}

int cmd_surface(const std::string &name, int resolution, const std::string &path,
                std::ostream &out, std::ostream &err) {
  Surface s{};
  try {
    s = surface_from_name(name);
  } catch (const Error &e) {
    // An unknown surface is a domain error, not a usage error.
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  if (resolution < 2)
    throw Error(ErrorCode::InvalidArgument, "--resolution must be at least 2");
  std::ostringstream csv;
  csv << "x1,x2,x3,surface_name\n";
  for (const SurfacePoint &p : sample_surface(s, resolution))
    csv << format_number(p.x1) << ',' << format_number(p.x2) << ','
        << format_number(p.x3) << ',' << to_string(s) << '\n';
  emit(csv.str(), path, out);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::StepTooLarge:
      return kUsageError;
    default:
      return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Entanglement sudden death under amplitude damping", "esdyn"};
  app.require_subcommand(1);

  std::string point, cone, state, out_path;
  bool json = false;
  auto *classify = app.add_subcommand("classify", "classify a state's disentanglement");
  classify->add_option("--point", point, "Bell point x1,x2,x3");
  classify->add_option("--cone", cone, "cone point x0,x1,x2,x3");
  classify->add_option("--state", state, "state JSON file");
  classify->add_flag("--json", json, "JSON output");

  EvolveOptions ev;
  auto *evolve = app.add_subcommand("evolve", "concurrence trajectory");
  evolve->add_option("--state", ev.state, "state JSON file");
  evolve->add_option("--point", ev.point, "Bell point x1,x2,x3");
  evolve->add_option("--tau", ev.tau, "final gamma*t")->capture_default_str();
  evolve->add_option("--samples", ev.samples, "number of samples")
      ->capture_default_str();
  evolve->add_flag("--oracle", ev.oracle, "integrate the master equation");
  evolve->add_option("--step", ev.step, "integrator step")->capture_default_str();
  evolve->add_option("--out", ev.out_path, "CSV output file");

  SweepOptions sw;
  auto *sweep = app.add_subcommand("sweep", "classify a grid over the tetrahedron");
  sweep->add_option("--grid", sw.grid, "points per axis (2..401)")->required();
  sweep->add_option("--slice", sw.slice, "fix one axis, e.g. x3=-0.5");
  sweep->add_option("--branch", sw.branch, "all, c1 (x3 < 0) or c2 (x3 >= 0)")
      ->capture_default_str();
  sweep->add_option("--out", sw.out_path, "CSV output file");

  std::string nf_state;
  bool nf_classify = false;
  auto *normal = app.add_subcommand("normal-form", "Lorentz normal form of a state");
  normal->add_option("--state", nf_state, "state JSON file")->required();
  normal->add_flag("--classify", nf_classify,
                   "also scan the original state's trajectory for death");

  std::uint64_t seed = 7;
  int count = 100;
  auto *verify = app.add_subcommand("verify", "run the self-verification suites");
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
  verify->add_option("--count", count, "trials per suite")->capture_default_str();

  std::string surface_name, surface_out;
  int resolution = 21;
  auto *surface = app.add_subcommand("surface", "sample a boundary surface");
  surface->add_option("--name", surface_name,
                      "tetrahedron, octahedron, quadratic, cd_planes, "
                      "cone_separable or cone_ead")
      ->required();
  surface->add_option("--resolution", resolution, "grid points per edge")
      ->capture_default_str();
  surface->add_option("--out", surface_out, "CSV output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*classify) return cmd_classify(point, cone, state, json, out);
    if (*evolve) return cmd_evolve(ev, out);
    if (*sweep) return cmd_sweep(sw, out);
    if (*normal) return cmd_normal_form(nf_state, nf_classify, out);
    if (*verify) return cmd_verify(seed, count, out);
    if (*surface) return cmd_surface(surface_name, resolution, surface_out, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace esdyn::cli
