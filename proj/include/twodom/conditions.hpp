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

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twodom/coefficients.hpp"

namespace twodom {

/// A coefficient variable: s, a, y_i or b_i.
struct Var {
  enum class Kind { S, A, Y, B };
  Kind kind = Kind::S;
  int index = 0;

  auto operator<=>(const Var&) const = default;

  std::string name() const {
    switch (kind) {
      case Kind::S: return "s";
      case Kind::A: return "a";
      case Kind::Y: return "y" + std::to_string(index);
      case Kind::B: return "b" + std::to_string(index);
    }
    return "?";
  }
};

/// Affine combination of coefficient variables with exact coefficients.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Var v) { terms_[v] = 1; }  // NOLINT(google-explicit-constructor)

  static LinearForm constant(const Rational& c) {
    LinearForm f;
    f.constant_ = c;
    return f;
  }

  const std::map<Var, Rational>& terms() const noexcept { return terms_; }
  const Rational& constant_term() const noexcept { return constant_; }

  LinearForm& operator+=(const LinearForm& o) {
    for (const auto& [v, c] : o.terms_) add_term(v, c);
    constant_ += o.constant_;
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) { return *this += o * Rational(-1); }
  LinearForm& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      constant_ = 0;
      return *this;
    }
    for (auto& [v, c] : terms_) c *= k;
    constant_ *= k;
    return *this;
  }

  friend LinearForm operator+(LinearForm l, const LinearForm& r) { return l += r; }
  friend LinearForm operator-(LinearForm l, const LinearForm& r) { return l -= r; }
  friend LinearForm operator*(LinearForm l, const Rational& k) { return l *= k; }
  friend LinearForm operator*(const Rational& k, LinearForm l) { return l *= k; }
  friend LinearForm operator*(long k, LinearForm l) { return l *= Rational(k); }

  Rational coefficient(const Var& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Value at a coefficient set.
  Rational evaluate(const CoefficientSet& c) const {
    Rational total = constant_;
    for (const auto& [v, k] : terms_) total += k * value_of(v, c);
    return total;
  }

  static const Rational& value_of(const Var& v, const CoefficientSet& c) {
    switch (v.kind) {
      case Var::Kind::S: return c.s;
      case Var::Kind::A: return c.a;
      case Var::Kind::Y: return c.y.at(static_cast<std::size_t>(v.index));
      case Var::Kind::B: return c.b.at(static_cast<std::size_t>(v.index));
    }
    return c.s;
  }

 private:
  void add_term(const Var& v, const Rational& c) {
    auto& slot = terms_[v];
    slot += c;
    if (slot == 0) terms_.erase(v);
  }

  std::map<Var, Rational> terms_;
  Rational constant_ = 0;
};

namespace vars {
inline LinearForm s() { return Var{Var::Kind::S, 0}; }
inline LinearForm a() { return Var{Var::Kind::A, 0}; }
inline LinearForm y(int i) { return Var{Var::Kind::Y, i}; }
inline LinearForm b(int i) { return Var{Var::Kind::B, i}; }
inline Rational q(long num, long den = 1) { return make_rational(num, den); }
}  // namespace vars

/// One elementary inequality `margin >= 0` (or `> 0` when strict).
struct ConditionRow {
  int family = 0;                // 1..41
  std::optional<int> i;          // instance index for families 36..41
  int part = 0;                  // position inside a chain condition (1..3), else 0
  std::string label;             // "(27)", "(2).3", "(38)[i=4]"
  std::string text;              // human-readable inequality
  LinearForm margin;             // LHS - RHS, oriented so that >= 0 is satisfied
  bool strict = false;
};

/// Every inequality the bound theorem places on (s, a, y, b) for a given d:
/// the chains (1)-(3) split into elementary comparisons, the caps (4)-(8), the
/// fixed conditions (9)-(35), and (36)-(41) for each 2 <= i <= d-2.
inline std::vector<ConditionRow> condition_rows(int d) {
  using namespace vars;
  if (d < 4) throw std::invalid_argument("conditions are defined for d >= 4");
  std::vector<ConditionRow> rows;
  auto idx = [](std::string base, int i) { return base + "_" + (i < 10 ? std::to_string(i) : "{" + std::to_string(i) + "}"); };
  auto Y = [&](int i) { return idx("y", i); };
  auto B = [&](int i) { return idx("b", i); };

  auto chain = [&](int family, int part, LinearForm greater, LinearForm smaller, std::string text,
                   bool strict = false) {
    rows.push_back({family, std::nullopt, part, "(" + std::to_string(family) + ")." + std::to_string(part),
                    std::move(text), greater - smaller, strict});
  };
  auto at_least_s = [&](int family, LinearForm lhs, std::string text, std::optional<int> i = std::nullopt) {
    std::string label = "(" + std::to_string(family) + ")";
    if (i) label += "[i=" + std::to_string(*i) + "]";
    rows.push_back({family, i, 0, label, std::move(text) + " >= s", lhs - s(), false});
  };
  auto cap = [&](int family, LinearForm bound, LinearForm var, std::string text) {
    rows.push_back({family, std::nullopt, 0, "(" + std::to_string(family) + ")", std::move(text), bound - var,
                    false});
  };

  // (1)  s > a >= y_{d+1} >= ... >= y_0 >= b_0 = 0
  int part = 1;
  chain(1, part++, s(), a(), "s > a", true);
  chain(1, part++, a(), y(d + 1), "a >= " + Y(d + 1));
  for (int i = d; i >= 0; --i) chain(1, part++, y(i + 1), y(i), Y(i + 1) + " >= " + Y(i));
  chain(1, part++, y(0), b(0), "y_0 >= b_0");

  // (2)  0 <= b_{d+1}-b_d <= b_d-b_{d-1} <= ... <= b_2-b_1 <= b_1
  part = 1;
  chain(2, part++, b(d + 1) - b(d), LinearForm(), B(d + 1) + " - " + B(d) + " >= 0");
  for (int i = d; i >= 1; --i)
    chain(2, part++, b(i) - b(i - 1), b(i + 1) - b(i),
          B(i) + " - " + B(i - 1) + " >= " + B(i + 1) + " - " + B(i));

  // (3)  0 <= y_{d+1}-b_{d+1} <= y_d-b_d <= ... <= y_1-b_1 <= y_0
  part = 1;
  chain(3, part++, y(d + 1) - b(d + 1), LinearForm(), Y(d + 1) + " - " + B(d + 1) + " >= 0");
  for (int i = d; i >= 0; --i)
    chain(3, part++, y(i) - b(i), y(i + 1) - b(i + 1),
          Y(i) + " - " + B(i) + " >= " + Y(i + 1) + " - " + B(i + 1));

  const LinearForm gap = s() - a();
  const Rational dd(d);
  cap(4, a() - gap * q(1, d + 2), y(d + 1), Y(d + 1) + " <= a - (s-a)/(d+2)");
  cap(5, a() - gap * q(1, d + 1), y(d), Y(d) + " <= a - (s-a)/(d+1)");
  cap(6, a() - gap * q(1, d + 3) - gap * q(1, d + 1), b(d + 1), B(d + 1) + " <= a - (s-a)/(d+3) - (s-a)/(d+1)");
  cap(7, a() - gap * q(1, d + 2) - gap * q(1, d + 1), b(d), B(d) + " <= a - (s-a)/(d+2) - (s-a)/(d+1)");
  cap(8, a() - gap * q(2, d + 1), b(d - 1), B(d - 1) + " <= a - 2(s-a)/(d+1)");

  const Rational half = q(1, 2);
  const LinearForm g3 = b(3) - b(2);
  const LinearForm g2 = b(2) - b(1);

  at_least_s(9, a() + dd * (a() - y(d - 1)), "a + d(a - y_{d-1})");
  at_least_s(10, a() + dd * (y(d + 1) - b(d)), "a + d(y_{d+1} - b_d)");
  at_least_s(11, y(d + 1) + (dd + 1) * (a() - y(d - 2)), "y_{d+1} + (d+1)(a - y_{d-2})");
  at_least_s(12, y(d + 1) + (dd + 1) * (y(d + 1) - b(d)), "y_{d+1} + (d+1)(y_{d+1} - b_d)");
  at_least_s(13, a() + (dd - 1) * (a() - y(d - 2)), "a + (d-1)(a - y_{d-2})");
  at_least_s(14, a() + (dd - 1) * (y(d) - b(d - 1)), "a + (d-1)(y_d - b_{d-1})");
  at_least_s(15, y(d) + dd * (a() - y(d - 3)), "y_d + d(a - y_{d-3})");
  at_least_s(16, y(d) + dd * (y(d) - b(d - 1)), "y_d + d(y_d - b_{d-1})");
  at_least_s(17, b(d + 1) + (dd + 1) * (a() - y(d - 2)), "b_{d+1} + (d+1)(a - y_{d-2})");
  at_least_s(18, b(d + 1) + (dd + 1) * (y(d - 1) - b(d - 1)), "b_{d+1} + (d+1)(y_{d-1} - b_{d-1})");
  at_least_s(19, a() + (dd - 1) * g3 + (y(2) - b(1)) + (dd - 3) * g3,
             "a + (d-1)(b_3 - b_2) + (y_2 - b_1) + (d-3)(b_3 - b_2)");
  at_least_s(20, y(2) + (dd - 3) * g3 + 2 * (y(2) - b(1) + (dd - 3) * g3),
             "y_2 + (d-3)(b_3 - b_2) + 2(y_2 - b_1 + (d-3)(b_3 - b_2))");
  at_least_s(21, a() + half * b(3) + (dd - q(3, 2)) * g3 + (a() - y(1)),
             "a + 1/2 b_3 + (d-3/2)(b_3 - b_2) + (a - y_1)");
  at_least_s(22, a() + half * b(3) + (dd - q(3, 2)) * g3 + (y(1) - b(1) + (dd - 3) * g3),
             "a + 1/2 b_3 + (d-3/2)(b_3 - b_2) + (y_1 - b_1 + (d-3)(b_3 - b_2))");
  at_least_s(23, q(3, 2) * a() + half * b(3) - half * y(0) + (dd - 2) * g2,
             "3/2 a + 1/2 b_3 - 1/2 y_0 + (d-2)(b_2 - b_1)");
  at_least_s(24, a() + half * b(3) + half * y(1) - half * b(1) + (dd - 2) * g2 + half * (dd - 3) * g3,
             "a + 1/2 b_3 + 1/2 y_1 - 1/2 b_1 + (d-2)(b_2 - b_1) + 1/2 (d-3)(b_3 - b_2)");
  at_least_s(25, q(3, 2) * a() + b(3) + half * (dd - 3) * (b(3) - b(1)) + half * (dd - 2) * g3,
             "3/2 a + b_3 + 1/2 (d-3)(b_3 - b_1) + 1/2 (d-2)(b_3 - b_2)");
  at_least_s(26,
             a() + b(3) + half * y(1) - half * b(1) + half * (dd - 3) * (b(3) - b(1)) + half * (dd - 4) * g3,
             "a + b_3 + 1/2 y_1 - 1/2 b_1 + 1/2 (d-3)(b_3 - b_1) + 1/2 (d-4)(b_3 - b_2)");
  at_least_s(27, b(3) + 3 * (a() - y(0)), "b_3 + 3(a - y_0)");
  at_least_s(28, b(3) + 3 * (y(1) - b(1) + (dd - 3) * g3), "b_3 + 3(y_1 - b_1 + (d-3)(b_3 - b_2))");
  at_least_s(29, 2 * y(1) + 2 * (dd - 2) * g2, "2 y_1 + 2(d-2)(b_2 - b_1)");
  at_least_s(30, a() + half * b(2) + (dd - q(3, 2)) * g2 + half * (a() - y(1)),
             "a + 1/2 b_2 + (d-3/2)(b_2 - b_1) + 1/2 (a - y_1)");
  at_least_s(31, a() + half * b(2) + (dd - q(3, 2)) * g2 + half * (y(1) - b(1) + (dd - 3) * g2),
             "a + 1/2 b_2 + (d-3/2)(b_2 - b_1) + 1/2 (y_1 - b_1 + (d-3)(b_2 - b_1))");
  at_least_s(32, a() + half * (dd - 1) * b(2), "a + 1/2 (d-1) b_2");
  at_least_s(33, b(2) + 2 * y(0) + 2 * (dd - 2) * g2, "b_2 + 2 y_0 + 2(d-2)(b_2 - b_1)");
  at_least_s(34, b(2) + y(0) + (dd - 2) * g2 + (a() - y(0)), "b_2 + y_0 + (d-2)(b_2 - b_1) + (a - y_0)");
  at_least_s(35, y(0) + (dd - 1) * b(1), "y_0 + (d-1) b_1");

  for (int i = 2; i <= d - 2; ++i) {
    const Rational ii(i);
    const LinearForm g = b(i + 2) - b(i + 1);
    const Rational tail = dd - ii - 2;  // d-i-2
    at_least_s(36, a() + (dd - ii) * g + ii * (a() - y(i - 1)), "a + (d-i)(b_{i+2} - b_{i+1}) + i(a - y_{i-1})", i);
    at_least_s(37, a() + (dd - ii) * g + ii * (y(i + 1) - b(i) + tail * g),
               "a + (d-i)(b_{i+2} - b_{i+1}) + i(y_{i+1} - b_i + (d-i-2)(b_{i+2} - b_{i+1}))", i);
    at_least_s(38, y(i + 1) + tail * g + (ii + 1) * (a() - y(i - 2)),
               "y_{i+1} + (d-i-2)(b_{i+2} - b_{i+1}) + (i+1)(a - y_{i-2})", i);
    at_least_s(39, y(i + 1) + tail * g + (ii + 1) * (y(i + 1) - b(i) + tail * g),
               "y_{i+1} + (d-i-2)(b_{i+2} - b_{i+1}) + (i+1)(y_{i+1} - b_i + (d-i-2)(b_{i+2} - b_{i+1}))", i);
    at_least_s(40, b(i + 2) + (ii + 2) * (a() - y(i - 1)), "b_{i+2} + (i+2)(a - y_{i-1})", i);
    at_least_s(41, b(i + 2) + (ii + 2) * (y(i) - b(i) + tail * g),
               "b_{i+2} + (i+2)(y_i - b_i + (d-i-2)(b_{i+2} - b_{i+1}))", i);
  }
  return rows;
}

struct ConditionVerdict {
  std::string label;
  std::string text;
  int family = 0;
  bool satisfied = false;
  Rational slack;  // margin at the coefficient set; >= 0 (> 0 if strict) when satisfied
};

struct ConditionReport {
  int d = 0;
  std::vector<ConditionVerdict> verdicts;
  bool overall = false;

  std::set<int> failing_families() const {
    std::set<int> out;
    for (const auto& v : verdicts)
      if (!v.satisfied) out.insert(v.family);
    return out;
  }

  const ConditionVerdict* find(const std::string& label) const {
    for (const auto& v : verdicts)
      if (v.label == label) return &v;
    return nullptr;
  }
};

/// Exact evaluation of every condition at c.
inline ConditionReport check_conditions(const CoefficientSet& c) {
  c.validate();
  ConditionReport report;
  report.d = c.d;
  report.overall = true;
  for (const auto& row : condition_rows(c.d)) {
    Rational slack = row.margin.evaluate(c);
    bool ok = row.strict ? slack > 0 : slack >= 0;
    report.overall = report.overall && ok;
    report.verdicts.push_back({row.label, row.text, row.family, ok, std::move(slack)});
  }
  return report;
}

}  // namespace twodom
