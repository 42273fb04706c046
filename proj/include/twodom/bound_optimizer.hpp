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

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twodom/coefficients.hpp"
#include "twodom/conditions.hpp"
#include "twodom/errors.hpp"
#include "twodom/simplex.hpp"

namespace twodom {

/// One LP row over {a, y_0..y_{d+1}, b_1..b_{d+1}} with s = 1 and b_0 = 0.
struct LinearConstraint {
  std::map<std::string, Rational> coeffs;
  lp::Relation relation = lp::Relation::GreaterEq;
  Rational rhs;
  std::string label;

  Rational evaluate(const std::map<std::string, Rational>& x) const {
    Rational total = 0;
    for (const auto& [name, k] : coeffs) {
      auto it = x.find(name);
      if (it != x.end()) total += k * it->second;
    }
    return total;
  }

  bool satisfied_by(const std::map<std::string, Rational>& x) const {
    Rational lhs = evaluate(x);
    switch (relation) {
      case lp::Relation::LessEq: return lhs <= rhs;
      case lp::Relation::GreaterEq: return lhs >= rhs;
      case lp::Relation::Equal: return lhs == rhs;
    }
    return false;
  }
};

/// LP variable names in column order.
inline std::vector<std::string> lp_variables(int d) {
  std::vector<std::string> names{"a"};
  for (int i = 0; i <= d + 1; ++i) names.push_back("y" + std::to_string(i));
  for (int i = 1; i <= d + 1; ++i) names.push_back("b" + std::to_string(i));
  return names;
}

/// The bound conditions for d as LP rows with s = 1, each scaled by a positive
/// integer so that all coefficients are integral, plus a >= 0, y_i >= 0 and
/// b_i >= 0. The strict s > a becomes a <= 1.
inline std::vector<LinearConstraint> build_constraints(int d) {
  if (d < 6) throw std::invalid_argument("LP needs d >= 6, got " + std::to_string(d));
  std::vector<LinearConstraint> out;
  for (const auto& row : condition_rows(d)) {
    LinearConstraint lc;
    lc.label = row.label;
    Rational constant = row.margin.constant_term();
    for (const auto& [v, k] : row.margin.terms()) {
      if (v.kind == Var::Kind::S)
        constant += k;
      else if (v.kind == Var::Kind::B && v.index == 0)
        continue;
      else
        lc.coeffs[v.name()] = k;
    }
    lc.rhs = -constant;
    mpz_class scale = 1;
    for (const auto& [name, k] : lc.coeffs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), k.get_den_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), lc.rhs.get_den_mpz_t());
    for (auto& [name, k] : lc.coeffs) k *= scale;
    lc.rhs *= scale;
    if (lc.coeffs.empty()) {
      if (lc.rhs > 0) throw InvariantViolation("condition " + row.label + " is unsatisfiable");
      continue;
    }
    out.push_back(std::move(lc));
  }
  for (const auto& name : lp_variables(d)) {
    LinearConstraint lc;
    lc.coeffs[name] = 1;
    lc.rhs = 0;
    lc.label = "nonneg " + name;
    out.push_back(std::move(lc));
  }
  return out;
}

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
  int d = 0;
  LpStatus status = LpStatus::Infeasible;
  Rational objective;                            // a*
  std::map<std::string, Rational> assignment;   // every LP variable
  bool verified = false;  // every row rechecked exactly and the transported set passes check_conditions
  bool vacuous = false;   // a* == 1, so s > a fails
  long pivots = 0;
  bool presolved = false;  // optimum found in floating point and certified exactly

  /// The optimum as a coefficient set with s = 1.
  CoefficientSet coefficients() const {
    CoefficientSet c;
    c.d = d;
    c.s = 1;
    c.a = objective;
    c.y.assign(static_cast<std::size_t>(d + 2), Rational(0));
    c.b.assign(static_cast<std::size_t>(d + 2), Rational(0));
    for (int i = 0; i <= d + 1; ++i) c.y[static_cast<std::size_t>(i)] = assignment.at("y" + std::to_string(i));
    for (int i = 1; i <= d + 1; ++i) c.b[static_cast<std::size_t>(i)] = assignment.at("b" + std::to_string(i));
    return c;
  }
};

enum class LpMethod {
  Auto,          // floating-point presolve plus exact certificate, exact simplex as fallback
  ExactSimplex,  // exact simplex with Bland's rule only
};

/// Minimizes a over build_constraints(d), then re-verifies the optimum row by
/// row and against check_conditions.
inline LpSolution solve_min_a(int d, LpMethod method = LpMethod::Auto) {
  const auto rows = build_constraints(d);
  const auto names = lp_variables(d);
  std::map<std::string, int> column;
  for (std::size_t j = 0; j < names.size(); ++j) column[names[j]] = static_cast<int>(j);

  lp::Problem<Rational> p;
  p.num_vars = static_cast<int>(names.size());
  p.objective.assign(names.size(), Rational(0));
  p.objective[0] = 1;
  for (const auto& lc : rows) {
    if (lc.coeffs.size() == 1 && lc.rhs == 0 && lc.relation == lp::Relation::GreaterEq && lc.coeffs.begin()->second > 0)
      continue;  // implied by x >= 0
    lp::Problem<Rational>::Row r;
    r.coeffs.assign(names.size(), Rational(0));
    for (const auto& [name, k] : lc.coeffs) r.coeffs[static_cast<std::size_t>(column.at(name))] = k;
    r.rel = lc.relation;
    r.rhs = lc.rhs;
    p.rows.push_back(std::move(r));
  }

  LpSolution sol;
  sol.d = d;
  std::optional<lp::Result<Rational>> res;
  // Floating-point presolve picks a near-optimal basis; the exact
  // refinement walks from its vertex to a certified optimum. Rows are scaled
  // to unit max coefficient and nudged inward by a tiny, row-dependent amount
  // to break degeneracy. The exact simplex runs only if every attempt fails.
  if (method == LpMethod::Auto) {
    for (long double nudge : {1e-8L, 1e-6L, 0.0L}) {
      lp::Problem<long double> approx;
      approx.num_vars = p.num_vars;
      for (const auto& q : p.objective) approx.objective.push_back(q.get_d());
      for (const auto& r : p.rows) {
        lp::Problem<long double>::Row ar;
        double scale = 0;
        for (const auto& q : r.coeffs) scale = std::max(scale, std::abs(q.get_d()));
        if (scale == 0) scale = 1;
        for (const auto& q : r.coeffs) ar.coeffs.push_back(q.get_d() / scale);
        ar.rel = r.rel;
        const long double e = nudge * (1 + static_cast<long double>(approx.rows.size() * 37 % 101) / 101);
        ar.rhs = r.rhs.get_d() / scale + (r.rel == lp::Relation::GreaterEq ? e : -e);
        approx.rows.push_back(std::move(ar));
      }
      try {
        auto guess = lp::minimize(approx, lp::PivotRule::Dantzig, 200000);
        sol.pivots += guess.pivots;
        if (guess.status == lp::Status::Optimal) res = lp::refine_vertex(p, guess.row_tight, guess.var_at_zero, 60);
      } catch (const std::runtime_error&) {
      }
      if (res) {
        sol.pivots += res->pivots;
        break;
      }
    }
  }
  sol.presolved = res.has_value();
  if (!res) {
    res = lp::minimize(p);
    sol.pivots += res->pivots;
  }
  if (res->status != lp::Status::Optimal) return sol;
  sol.status = LpStatus::Optimal;
  sol.objective = res->value;
  for (std::size_t j = 0; j < names.size(); ++j) sol.assignment[names[j]] = res->x[j];

  bool rows_ok = true;
  for (const auto& lc : rows) rows_ok = rows_ok && lc.satisfied_by(sol.assignment);
  sol.vacuous = sol.objective >= 1;
  sol.verified = rows_ok && !sol.vacuous && check_conditions(sol.coefficients()).overall;
  return sol;
}

struct ReferenceBound {
  double raw = 0;     // (2 ln(δ+1) + 1) / (δ+1)
  double capped = 0;  // min(raw, 1/2) once δ >= 3
};

inline ReferenceBound reference_bound(int delta) {
  if (delta < 0) throw std::invalid_argument("delta must be non-negative");
  ReferenceBound r;
  const double k = delta + 1.0;
  r.raw = (2.0 * std::log(k) + 1.0) / k;
  r.capped = delta >= 3 ? std::min(r.raw, 0.5) : r.raw;
  return r;
}

/// Reduced a/s of the built-in integer coefficient sets, δ = 6..9.
inline std::vector<std::pair<int, Rational>> corollary_fractions() {
  std::vector<std::pair<int, Rational>> out;
  for (int delta = 6; delta <= 9; ++delta) out.emplace_back(delta, builtin_table2(delta).ratio());
  return out;
}

}  // namespace twodom
