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

#include "esdyn/state_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "esdyn/error.hpp"

namespace esdyn {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string &what) {
  throw Error(ErrorCode::ParseError, what);
}

double real_number(const json &j) {
  if (!j.is_number()) parse_error("expected a number, got " + j.dump());
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_error("non-finite number");
  return v;
}

std::vector<double> real_vector(const json &j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    parse_error("expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const auto &e : j) out.push_back(real_number(e));
  return out;
}

template <typename Entry>
void for_each_4x4(const json &j, Entry &&entry) {
  if (!j.is_array() || j.size() != 4) parse_error("expected 4 rows");
  for (int r = 0; r < 4; ++r) {
    const json &row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) parse_error("expected 4 columns");
    for (int c = 0; c < 4; ++c) entry(r, c, row[static_cast<std::size_t>(c)]);
  }
}

Complex complex_number(const json &j) {
  if (j.is_number()) return {real_number(j), 0.0};
  const auto v = real_vector(j, 2);
  return {v[0], v[1]};
}

void fill_xstate(StateInput &in) {
  if (is_x_shaped(in.r, 1e-12 * std::max(1.0, std::abs(in.r.trace()))))
    in.xstate = XStateParams::from_r(in.r);
}

}  // namespace

std::string_view to_string(StateKind k) {
  switch (k) {
    case StateKind::Density: return "density";
    case StateKind::RMatrix: return "rmatrix";
    case StateKind::BellPoint: return "bell_point";
    case StateKind::XState: return "xstate";
  }
  return "unknown";
}

StateInput parse_state_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    parse_error(e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("data"))
    parse_error("state must be an object with \"kind\" and \"data\"");
  if (!doc["kind"].is_string()) parse_error("\"kind\" must be a string");

  StateInput in;
  if (doc.contains("unnormalized")) {
    if (!doc["unnormalized"].is_boolean())
      parse_error("\"unnormalized\" must be a boolean");
    in.unnormalized = doc["unnormalized"].get<bool>();
  }

  const std::string kind = doc["kind"].get<std::string>();
  const json &data = doc["data"];
  if (kind == "density") {
    in.kind = StateKind::Density;
    Matrix4c m;
    for_each_4x4(data, [&](int r, int c, const json &e) {
      m(r, c) = complex_number(e);
    });
    in.density = DensityMatrix::physical(m, in.unnormalized);
    in.r = r_from_density(in.density);
  } else if (kind == "rmatrix") {
    in.kind = StateKind::RMatrix;
    for_each_4x4(data, [&](int r, int c, const json &e) {
      in.r.entries(r, c) = real_number(e);
    });
    in.density = DensityMatrix::physical(
        density_from_r(in.r, in.unnormalized).matrix(), in.unnormalized);
  } else if (kind == "bell_point") {
    in.kind = StateKind::BellPoint;
    const auto v = real_vector(data, 3);
    in.bell_point = BellPoint{v[0], v[1], v[2]};
    in.density = bell_point_to_density(*in.bell_point);
    in.r = XStateParams::from_bell_point(*in.bell_point).to_r();
  } else if (kind == "xstate") {
    in.kind = StateKind::XState;
    const auto v = real_vector(data, 6);
    XStateParams s;
    std::copy(v.begin(), v.end(), s.x.begin());
    in.r = s.to_r();
    in.density = DensityMatrix::physical(
        density_from_r(in.r, in.unnormalized).matrix(), in.unnormalized);
  } else {
    parse_error("unknown state kind '" + kind + "'");
  }
  fill_xstate(in);
  return in;
}

StateInput load_state_file(const std::string &path) {
  std::ifstream file(path);
  if (!file) parse_error("cannot open state file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_state_json(buffer.str());
}

std::string state_to_json(const RMatrix &r) {
  json data = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(r.entries(i, j));
    data.push_back(row);
  }
  return json{{"kind", "rmatrix"}, {"data", data}}.dump();
}

std::string state_to_json(const DensityMatrix &rho) {
  json data = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j)
      row.push_back({rho(i, j).real(), rho(i, j).imag()});
    data.push_back(row);
  }
  json doc{{"kind", "density"}, {"data", data}};
  if (rho.unnormalized()) doc["unnormalized"] = true;
  return doc.dump();
}

std::string state_to_json(const BellPoint &p) {
  return json{{"kind", "bell_point"}, {"data", {p.x1, p.x2, p.x3}}}.dump();
}

std::string state_to_json(const XStateParams &s) {
  json doc{{"kind", "xstate"}, {"data", s.x}};
  if (std::abs(s[0] - 1.0) > kTraceTolerance) doc["unnormalized"] = true;
  return doc.dump();
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

}  // namespace esdyn
