// Copyright 2026 The twodom Authors
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

#include <json.hpp>

#include <string>

#include "twodom/algorithms.hpp"
#include "twodom/bound_optimizer.hpp"
#include "twodom/colored_state.hpp"
#include "twodom/conditions.hpp"
#include "twodom/errors.hpp"

namespace twodom::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(0, where + ": " + e.what());
    }
  }
  throw ParseError(0, where + ": expected an integer or a \"num/den\" string");
}

/// Reads {d, s, a, y: [...], b: [...]}; entries are integers or "num/den".
inline CoefficientSet coefficients_from_json(const json& j) {
  if (!j.is_object()) throw ParseError(0, "coefficient document must be a JSON object");
  for (const char* key : {"d", "s", "a", "y", "b"})
    if (!j.contains(key)) throw ParseError(0, std::string("coefficient document lacks \"") + key + "\"");
  if (!j["d"].is_number_integer()) throw ParseError(0, "\"d\" must be an integer");
  CoefficientSet c;
  c.d = j["d"].get<int>();
  c.s = rational_from_json(j["s"], "s");
  c.a = rational_from_json(j["a"], "a");
  for (const char* key : {"y", "b"}) {
    if (!j[key].is_array()) throw ParseError(0, std::string("\"") + key + "\" must be an array");
    auto& dst = key[0] == 'y' ? c.y : c.b;
    for (std::size_t i = 0; i < j[key].size(); ++i)
      dst.push_back(rational_from_json(j[key][i], std::string(key) + "[" + std::to_string(i) + "]"));
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return c;
}

inline CoefficientSet parse_coefficients(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  return coefficients_from_json(j);
}

inline json to_json(const CoefficientSet& c) {
  json j{{"version", kSchemaVersion}, {"d", c.d}, {"s", rational_json(c.s)}, {"a", rational_json(c.a)}};
  j["y"] = json::array();
  j["b"] = json::array();
  for (const auto& q : c.y) j["y"].push_back(rational_json(q));
  for (const auto& q : c.b) j["b"].push_back(rational_json(q));
  return j;
}

inline json to_json(const ConditionReport& r) {
  json j{{"version", kSchemaVersion}, {"d", r.d}, {"overall", r.overall}};
  j["conditions"] = json::array();
  for (const auto& v : r.verdicts)
    j["conditions"].push_back(
        {{"label", v.label}, {"text", v.text}, {"satisfied", v.satisfied}, {"slack", rational_json(v.slack)}});
  return j;
}

/// Per-vertex color and WY-degree, and D as a sorted list.
inline json snapshot(const ColoredState& st) {
  json j{{"version", kSchemaVersion}, {"n", st.n()}};
  j["vertices"] = json::array();
  for (Vertex v = 0; v < st.n(); ++v)
    j["vertices"].push_back({{"id", v}, {"color", color_name(st.color(v))}, {"wy_degree", st.wy_degree(v)}});
  j["D"] = st.dominating_set();
  return j;
}

inline json to_json(const RunCertificate& cert) {
  json j{{"version", kSchemaVersion},
         {"n", cert.n},
         {"coefficients", to_json(cert.coefficients)},
         {"D", cert.final_d},
         {"size", cert.final_d.size()},
         {"bound", rational_json(cert.bound())},
         {"valid_2dom", cert.valid_2dom},
         {"bound_ok", cert.bound_ok},
         {"all_drops_ok", cert.all_drops_ok()},
         {"all_consistent", cert.all_consistent()}};
  j["coefficients"].erase("version");
  j["steps"] = json::array();
  for (const auto& st : cert.steps) {
    json s{{"batch", st.batch},
           {"rule", st.rule},
           {"weight_before", rational_json(st.weight_before)},
           {"weight_after", rational_json(st.weight_after)},
           {"drop", rational_json(st.drop())},
           {"drop_ok", st.drop_ok},
           {"state_consistent", st.state_consistent}};
    if (st.sweep_ok) s["sweep_ok"] = *st.sweep_ok;
    j["steps"].push_back(std::move(s));
  }
  return j;
}

inline json to_json(const LpSolution& sol) {
  json j{{"version", kSchemaVersion},
         {"d", sol.d},
         {"status", sol.status == LpStatus::Optimal ? "optimal" : "infeasible"},
         {"verified", sol.verified}};
  if (sol.status == LpStatus::Optimal) {
    j["a_star"] = rational_json(sol.objective);
    j["a_star_decimal"] = to_decimal(sol.objective);
    j["assignment"] = json::object();
    for (const auto& [name, q] : sol.assignment) j["assignment"][name] = rational_json(q);
    if (sol.vacuous) j["vacuous"] = true;
  }
  return j;
}

}  // namespace twodom::io
