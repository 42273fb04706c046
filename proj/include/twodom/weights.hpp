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
#include <vector>

#include "twodom/coefficients.hpp"
#include "twodom/colored_state.hpp"

namespace twodom {

/// Per-vertex weights of a colored graph under a coefficient set.
///
/// Both weight tables are precomputed up to a maximum WY-degree, so a lookup
/// is an array access.
///
///   color      Type 1                                  Type 2
///   white      a                                       a
///   Y_i        a-(s-a)/(i+1)      if i >= d            y_i
///              a-(s-a)/(d+1)      if i <  d
///   B_i        a-(s-a)/(i+2)-(s-a)/i    if i > d       b_{d+1}   if i > d
///              a-(s-a)/(d+2)-(s-a)/(d+1) if i = d      b_i       if i <= d
///              a-2(s-a)/(d+1)     if i <  d
///   red        0                                       0
class WeightTable {
 public:
  WeightTable(const CoefficientSet& c, int max_wy) : coeffs_(c), d_(c.d) {
    c.validate();
    const int top = std::max(max_wy, d_ + 2);
    const Rational gap = c.s - c.a;
    for (int i = 0; i <= top; ++i) {
      Rational y1 = i >= d_ ? Rational(c.a - gap / (i + 1)) : Rational(c.a - gap / (d_ + 1));
      Rational b1 = i > d_    ? Rational(c.a - gap / (i + 2) - gap / i)
                    : i == d_ ? Rational(c.a - gap / (d_ + 2) - gap / (d_ + 1))
                              : Rational(c.a - 2 * gap / (d_ + 1));
      type1_yellow_.push_back(y1);
      type1_blue_.push_back(b1);
      type2_yellow_.push_back(c.y[static_cast<std::size_t>(std::min(i, d_ + 1))]);
      type2_blue_.push_back(c.b[static_cast<std::size_t>(std::min(i, d_ + 1))]);
    }
  }

  const CoefficientSet& coefficients() const noexcept { return coeffs_; }
  int d() const noexcept { return d_; }

  const Rational& weight(StateType type, Color color, int wy) const {
    switch (color) {
      case Color::White: return coeffs_.a;
      case Color::Red: return zero_;
      case Color::Yellow:
        return type == StateType::Type1 ? at(type1_yellow_, wy) : at(type2_yellow_, wy);
      case Color::Blue:
        return type == StateType::Type1 ? at(type1_blue_, wy) : at(type2_blue_, wy);
    }
    return zero_;
  }

  const Rational& vertex_weight(const ColoredState& st, StateType type, Vertex v) const {
    return weight(type, st.color(v), st.wy_degree(v));
  }

  Rational total(const ColoredState& st) const {
    const StateType type = st.classify_type(d_);
    Rational sum = 0;
    for (Vertex v = 0; v < st.n(); ++v) sum += vertex_weight(st, type, v);
    return sum;
  }

 private:
  const Rational& at(const std::vector<Rational>& table, int i) const {
    return table[static_cast<std::size_t>(std::min<int>(i, static_cast<int>(table.size()) - 1))];
  }

  CoefficientSet coeffs_;
  int d_;
  std::vector<Rational> type1_yellow_, type1_blue_, type2_yellow_, type2_blue_;
  Rational zero_ = 0;
};

/// w(v) in the current state; the state's type is taken with respect to c.d.
inline Rational vertex_weight(const ColoredState& st, Vertex v, const CoefficientSet& c) {
  WeightTable table(c, st.graph().max_degree());
  return table.vertex_weight(st, st.classify_type(c.d), v);
}

/// w(G^D), the sum of all vertex weights.
inline Rational total_weight(const ColoredState& st, const CoefficientSet& c) {
  return WeightTable(c, st.graph().max_degree()).total(st);
}

}  // namespace twodom
