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

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace twodom::lp {

enum class Relation { LessEq, GreaterEq, Equal };

/// minimize objective . x  subject to  rows, x >= 0.
template <class F>
struct Problem {
  struct Row {
    std::vector<F> coeffs;
    Relation rel = Relation::GreaterEq;
    F rhs{};
  };
  int num_vars = 0;
  std::vector<F> objective;
  std::vector<Row> rows;
};

enum class Status { Optimal, Infeasible, Unbounded };

template <class F>
struct Result {
  Status status = Status::Infeasible;
  F value{};
  std::vector<F> x;
  /// At the final basis: structural variables held at zero, and rows held tight.
  std::vector<bool> var_at_zero;
  std::vector<bool> row_tight;
  long pivots = 0;
};

enum class PivotRule { Bland, Dantzig };

/// Sign tests; exact for exact fields, with an absolute tolerance for double.
template <class F>
struct Signs {
  static bool zero(const F& x) { return x == F(0); }
  static bool neg(const F& x) { return x < F(0); }
  static bool pos(const F& x) { return x > F(0); }
  static bool pivot_ok(const F& x) { return x > F(0); }
  static const F& clamp(const F& x) { return x; }
};

template <class T>
struct FloatSigns {
  static constexpr T kEps = T(1e-9);
  static bool zero(T x) { return std::abs(x) <= kEps; }
  static bool neg(T x) { return x < -kEps; }
  static bool pos(T x) { return x > kEps; }
  static bool pivot_ok(T x) { return x > T(1e-7); }
  static T clamp(T x) { return x < 0 ? T(0) : x; }
};

template <>
struct Signs<double> : FloatSigns<double> {};
template <>
struct Signs<long double> : FloatSigns<long double> {};

namespace detail {
inline double to_dbl(double x){return x;}
inline double to_dbl(long double x){return static_cast<double>(x);}
template<class T> double to_dbl(const T& x){return x.get_d();}

/// Dense two-phase tableau. Bland's rule never cycles; Dantzig's rule is
/// faster in practice and is used for the floating-point presolve.
template <class F>
class Tableau {
  using S = Signs<F>;

 public:
  Tableau(const Problem<F>& p, PivotRule rule) : n_(p.num_vars), rule_(rule) {
    if (static_cast<int>(p.objective.size()) != n_) throw std::invalid_argument("objective size mismatch");
    int slacks = 0, artificials = 0;
    for (const auto& r : p.rows) {
      if (static_cast<int>(r.coeffs.size()) != n_) throw std::invalid_argument("row size mismatch");
      Relation rel = normalized_relation(r);
      if (rel != Relation::Equal) ++slacks;
      if (rel != Relation::LessEq) ++artificials;
    }
    art_begin_ = n_ + slacks;
    cols_ = art_begin_ + artificials;
    m_ = static_cast<int>(p.rows.size());
    t_.assign(static_cast<std::size_t>(m_), std::vector<F>(static_cast<std::size_t>(cols_ + 1), F(0)));
    basis_.assign(static_cast<std::size_t>(m_), -1);
    row_slack_.assign(static_cast<std::size_t>(m_), -1);

    int slack = n_, art = art_begin_;
    for (int i = 0; i < m_; ++i) {
      const auto& r = p.rows[static_cast<std::size_t>(i)];
      const bool flip = r.rhs < F(0);
      auto& row = t_[static_cast<std::size_t>(i)];
      for (int j = 0; j < n_; ++j) row[idx(j)] = flip ? F(-r.coeffs[idx(j)]) : r.coeffs[idx(j)];
      row[idx(cols_)] = flip ? F(-r.rhs) : r.rhs;
      Relation rel = normalized_relation(r);
      if (rel != Relation::Equal) row_slack_[idx(i)] = slack;
      if (rel == Relation::LessEq) {
        row[idx(slack)] = 1;
        basis_[idx(i)] = slack++;
      } else {
        if (rel == Relation::GreaterEq) row[idx(slack++)] = -1;
        row[idx(art)] = 1;
        basis_[idx(i)] = art++;
      }
    }
  }

  Result<F> solve(const std::vector<F>& objective, long max_pivots) {
    Result<F> res;
    // Phase 1: minimize the sum of artificials.
    std::vector<F> phase1(idx(cols_), F(0));
    for (int j = art_begin_; j < cols_; ++j) phase1[idx(j)] = 1;
    set_objective(phase1);
    if (run(cols_, res.pivots, max_pivots) != Status::Optimal) throw std::runtime_error("simplex pivot limit reached");
    if (!S::zero(obj_[idx(cols_)])) {
      res.status = Status::Infeasible;
      return res;
    }
    drive_out_artificials(res.pivots);

    std::vector<F> phase2(idx(cols_), F(0));
    for (int j = 0; j < n_; ++j) phase2[idx(j)] = objective[idx(j)];
    set_objective(phase2);
    res.status = run(art_begin_, res.pivots, max_pivots);
    if (res.status != Status::Optimal) return res;

    std::vector<bool> basic(idx(cols_), false);
    for (int b : basis_) basic[idx(b)] = true;
    res.x.assign(idx(n_), F(0));
    for (int i = 0; i < m_; ++i) {
      int b = basis_[idx(i)];
      if (b < n_) res.x[idx(b)] = t_[idx(i)][idx(cols_)];
    }
    res.value = F(0);
    for (int j = 0; j < n_; ++j) res.value += objective[idx(j)] * res.x[idx(j)];
    for (int j = 0; j < n_; ++j) res.var_at_zero.push_back(!basic[idx(j)]);
    for (int s : row_slack_) res.row_tight.push_back(s < 0 || !basic[idx(s)]);
    return res;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  static Relation normalized_relation(const typename Problem<F>::Row& r) {
    if (!(r.rhs < F(0)) || r.rel == Relation::Equal) return r.rel;
    return r.rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
  }

  // obj_ holds reduced costs; obj_[cols_] is minus the current objective value.
  void set_objective(const std::vector<F>& c) {
    obj_.assign(idx(cols_ + 1), F(0));
    for (int j = 0; j < cols_; ++j) obj_[idx(j)] = c[idx(j)];
    for (int i = 0; i < m_; ++i) {
      const F cb = c[idx(basis_[idx(i)])];
      if (cb == F(0)) continue;
      const auto& row = t_[idx(i)];
      for (int j = 0; j <= cols_; ++j)
        if (row[idx(j)] != F(0)) obj_[idx(j)] -= cb * row[idx(j)];
    }
  }

  int entering(int allowed_cols) const {
    int enter = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      if (!S::neg(obj_[idx(j)])) continue;
      if (rule_ == PivotRule::Bland) return j;
      if (enter < 0 || obj_[idx(j)] < obj_[idx(enter)]) enter = j;
    }
    return enter;
  }

  Status run(int allowed_cols, long& pivots, long max_pivots) {
    for (;;) {
      int enter = entering(allowed_cols);
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      F best{};
      for (int i = 0; i < m_; ++i) {
        const F& a = t_[idx(i)][idx(enter)];
        if (!S::pivot_ok(a)) continue;
        F ratio = S::clamp(t_[idx(i)][idx(cols_)]) / a;
        bool take = leave < 0 || S::neg(ratio - best);
        if (!take && S::zero(ratio - best))
          take = rule_ == PivotRule::Bland ? basis_[idx(i)] < basis_[idx(leave)]
                                           : t_[idx(leave)][idx(enter)] < a;
        if (take) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return Status::Unbounded;
      if (pivots >= max_pivots) throw std::runtime_error("simplex pivot limit reached");
      pivot(leave, enter);
      ++pivots;
    }
  }

  void drive_out_artificials(long& pivots) {
    for (int i = 0; i < m_; ++i) {
      if (basis_[idx(i)] < art_begin_) continue;
      int col = -1;
      for (int j = 0; j < art_begin_; ++j)
        if (!S::zero(t_[idx(i)][idx(j)])) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(i, col);
        ++pivots;
        continue;
      }
      // Redundant row.
      t_.erase(t_.begin() + i);
      basis_.erase(basis_.begin() + i);
      --m_;
      --i;
    }
  }

  void pivot(int r, int c) {
    auto& prow = t_[idx(r)];
    const F inv = F(1) / prow[idx(c)];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      auto& e = prow[idx(j)];
      if (e == F(0)) continue;
      e *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<F>& row) {
      const F k = row[idx(c)];
      if (k == F(0)) return;
      for (int j : nz) row[idx(j)] -= k * prow[idx(j)];
      row[idx(c)] = F(0);
    };
    for (int i = 0; i < m_; ++i)
      if (i != r) eliminate(t_[idx(i)]);
    eliminate(obj_);
    prow[idx(c)] = F(1);
    basis_[idx(r)] = c;
  }

  int n_ = 0, m_ = 0, cols_ = 0, art_begin_ = 0;
  PivotRule rule_;
  std::vector<std::vector<F>> t_;
  std::vector<F> obj_;
  std::vector<int> basis_;
  std::vector<int> row_slack_;
};

/// Solves the square system A x = b exactly; nullopt when A is singular.
template <class F>
std::optional<std::vector<F>> solve_square(std::vector<std::vector<F>> a, std::vector<F> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == F(0)) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const F inv = F(1) / a[col][col];
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < n; ++j)
      if (a[col][j] != F(0)) {
        a[col][j] *= inv;
        nz.push_back(j);
      }
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == F(0)) continue;
      const F k = a[i][col];
      for (std::size_t j : nz) a[i][j] -= k * a[col][j];
      b[i] -= k * b[col];
    }
  }
  return b;
}

}  // namespace detail

/// Solves p with the two-phase simplex method.
template <class F>
Result<F> minimize(const Problem<F>& p, PivotRule rule = PivotRule::Bland, long max_pivots = 1'000'000) {
  detail::Tableau<F> tab(p, rule);
  return tab.solve(p.objective, max_pivots);
}

/// Starts from the vertex named by `row_tight` / `var_at_zero` (typically
/// read off an inexact solve) and walks to an exactly optimal vertex. Each
/// step swaps one active constraint: a dual step when the multipliers have the
/// right signs but some row is violated, a primal step when the point is
/// feasible but some multiplier has the wrong sign. Lowest-index choices keep
/// it from cycling. Gives up (nullopt) when the start is neither primal nor
/// dual feasible, when the active system is singular, or after `max_steps`.
/// Equality rows are not supported.
template <class F>
std::optional<Result<F>> refine_vertex(const Problem<F>& p, const std::vector<bool>& row_tight,
                                       const std::vector<bool>& var_at_zero, int max_steps) {
  const auto z = [](auto i) { return static_cast<std::size_t>(i); };
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  if (row_tight.size() != z(m) || var_at_zero.size() != z(n)) return std::nullopt;
  // Every constraint as g_k . x >= h_k; bounds x_j >= 0 are k = m + j.
  std::vector<std::vector<F>> g(z(m + n));
  std::vector<F> h(z(m + n), F(0));
  for (int i = 0; i < m; ++i) {
    const auto& r = p.rows[z(i)];
    if (r.rel == Relation::Equal) return std::nullopt;
    const bool flip = r.rel == Relation::LessEq;
    g[z(i)] = r.coeffs;
    h[z(i)] = r.rhs;
    if (flip) {
      for (auto& v : g[z(i)]) v = -v;
      h[z(i)] = -h[z(i)];
    }
  }
  for (int j = 0; j < n; ++j) {
    g[z(m + j)].assign(z(n), F(0));
    g[z(m + j)][z(j)] = 1;
  }

  std::vector<int> active;
  for (int i = 0; i < m; ++i)
    if (row_tight[z(i)]) active.push_back(i);
  for (int j = 0; j < n; ++j)
    if (var_at_zero[z(j)]) active.push_back(m + j);
  if (static_cast<int>(active.size()) != n) return std::nullopt;

  auto dot = [&](const std::vector<F>& a, const std::vector<F>& b) {
    F s(0);
    for (int j = 0; j < n; ++j)
      if (a[z(j)] != F(0) && b[z(j)] != F(0)) s += a[z(j)] * b[z(j)];
    return s;
  };

  for (int step = 0; step <= max_steps; ++step) {
    std::vector<std::vector<F>> a, at(z(n), std::vector<F>(z(n)));
    std::vector<F> rhs;
    for (int k : active) {
      a.push_back(g[z(k)]);
      rhs.push_back(h[z(k)]);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) at[z(j)][z(i)] = a[z(i)][z(j)];
    auto x = detail::solve_square(a, rhs);
    auto lambda = x ? detail::solve_square(at, p.objective) : std::nullopt;
    if (!x || !lambda) return std::nullopt;

    std::vector<bool> in(z(m + n), false);
    for (int k : active) in[z(k)] = true;
    std::vector<F> slack(z(m + n));
    int violated = -1;
    for (int k = 0; k < m + n; ++k) {
      slack[z(k)] = dot(g[z(k)], *x) - h[z(k)];
      if (violated < 0 && !in[z(k)] && slack[z(k)] < F(0)) violated = k;
    }
    int negative = -1;
    for (int i = 0; i < n; ++i)
      if ((*lambda)[z(i)] < F(0) && (negative < 0 || active[z(i)] < active[z(negative)])) negative = i;

    if (violated < 0 && negative < 0) {
      Result<F> res;
      res.status = Status::Optimal;
      res.x = std::move(*x);
      res.value = dot(p.objective, res.x);
      for (int i = 0; i < m; ++i) res.row_tight.push_back(in[z(i)]);
      for (int j = 0; j < n; ++j) res.var_at_zero.push_back(in[z(m + j)]);
      res.pivots = step;
      return res;
    }
    if (step == max_steps || (violated >= 0 && negative >= 0)) return std::nullopt;

    if (violated >= 0) {
      // Dual step: bring in the violated row, drop the first active
      // constraint whose multiplier reaches zero.
      auto mu = detail::solve_square(at, g[z(violated)]);
      if (!mu) return std::nullopt;
      int out = -1;
      F best{};
      for (int i = 0; i < n; ++i) {
        if (!((*mu)[z(i)] > F(0))) continue;
        F t = (*lambda)[z(i)] / (*mu)[z(i)];
        if (out < 0 || t < best || (t == best && active[z(i)] < active[z(out)])) {
          out = i;
          best = t;
        }
      }
      if (out < 0) return std::nullopt;  // infeasible
      active[z(out)] = violated;
    } else {
      // Primal step: leave the constraint with a negative multiplier and
      // stop at the first inactive constraint that becomes tight.
      std::vector<F> e(z(n), F(0));
      e[z(negative)] = 1;
      auto dir = detail::solve_square(a, e);
      if (!dir) return std::nullopt;
      int enter = -1;
      F best{};
      for (int k = 0; k < m + n; ++k) {
        if (in[z(k)]) continue;
        F rate = dot(g[z(k)], *dir);
        if (!(rate < F(0))) continue;
        F t = slack[z(k)] / -rate;
        if (enter < 0 || t < best) {
          enter = k;
          best = t;
        }
      }
      if (enter < 0) return std::nullopt;  // unbounded
      active[z(negative)] = enter;
    }
  }
  return std::nullopt;
}

/// Checks exactly that the vertex defined by `row_tight` / `var_at_zero` is an
/// optimum of p: the tight system must be square and nonsingular, its solution
/// feasible, and the objective a combination of the tight constraints with
/// multipliers of the right signs (a dual certificate).
template <class F>
std::optional<Result<F>> certify_vertex(const Problem<F>& p, const std::vector<bool>& row_tight,
                                        const std::vector<bool>& var_at_zero) {
  const int n = p.num_vars;
  std::vector<std::vector<F>> active;
  std::vector<F> rhs;
  std::vector<int> origin;  // row index, or -1 - j for the bound x_j >= 0
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    if (row_tight[i]) {
      active.push_back(p.rows[i].coeffs);
      rhs.push_back(p.rows[i].rhs);
      origin.push_back(static_cast<int>(i));
    }
  for (int j = 0; j < n; ++j)
    if (var_at_zero[static_cast<std::size_t>(j)]) {
      std::vector<F> e(static_cast<std::size_t>(n), F(0));
      e[static_cast<std::size_t>(j)] = 1;
      active.push_back(std::move(e));
      rhs.push_back(F(0));
      origin.push_back(-1 - j);
    }
  if (static_cast<int>(active.size()) != n) return std::nullopt;

  auto x = detail::solve_square(active, rhs);
  if (!x) return std::nullopt;
  for (const auto& xj : *x)
    if (xj < F(0)) return std::nullopt;
  for (const auto& r : p.rows) {
    F lhs(0);
    for (int j = 0; j < n; ++j) lhs += r.coeffs[static_cast<std::size_t>(j)] * (*x)[static_cast<std::size_t>(j)];
    bool ok = r.rel == Relation::LessEq ? lhs <= r.rhs : r.rel == Relation::GreaterEq ? lhs >= r.rhs : lhs == r.rhs;
    if (!ok) return std::nullopt;
  }

  std::vector<std::vector<F>> transposed(static_cast<std::size_t>(n), std::vector<F>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      transposed[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = active[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto mult = detail::solve_square(transposed, p.objective);
  if (!mult) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    const F& m = (*mult)[static_cast<std::size_t>(i)];
    const int o = origin[static_cast<std::size_t>(i)];
    Relation rel = o < 0 ? Relation::GreaterEq : p.rows[static_cast<std::size_t>(o)].rel;
    if ((rel == Relation::GreaterEq && m < F(0)) || (rel == Relation::LessEq && m > F(0))) return std::nullopt;
  }

  Result<F> res;
  res.status = Status::Optimal;
  res.x = std::move(*x);
  res.value = F(0);
  for (int j = 0; j < n; ++j) res.value += p.objective[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
  res.row_tight = row_tight;
  res.var_at_zero = var_at_zero;
  return res;
}

}  // namespace twodom::lp
