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
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twodom/colored_state.hpp"
#include "twodom/conditions.hpp"
#include "twodom/errors.hpp"
#include "twodom/weights.hpp"

namespace twodom {

/// A set of vertices selected together, with the rule that chose it.
struct Batch {
  std::vector<Vertex> vertices;
  std::string rule;
};

struct CertifiedStep {
  std::vector<Vertex> batch;
  std::string rule;
  Rational weight_before;
  Rational weight_after;
  bool drop_ok = false;           // weight_before - weight_after >= |batch| * s
  bool state_consistent = false;  // incremental coloring equals the from-scratch one
  /// Only for a closing batch made of every remaining white vertex:
  /// x*a + z2*b_2 + z1*b_1 >= x*s with x = |W_0|, z2 = |B_2|, z1 = |B_1|.
  std::optional<bool> sweep_ok;

  Rational drop() const { return weight_before - weight_after; }
};

struct RunCertificate {
  int n = 0;
  CoefficientSet coefficients;
  std::vector<CertifiedStep> steps;
  std::vector<Vertex> final_d;
  bool valid_2dom = false;
  bool bound_ok = false;  // |D| <= (a/s) n

  bool all_drops_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& st) { return st.drop_ok; });
  }
  bool all_consistent() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& st) { return st.state_consistent; });
  }
  bool sweeps_ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& st) { return st.sweep_ok.value_or(true); });
  }
  bool ok() const { return valid_2dom && bound_ok && all_drops_ok() && all_consistent() && sweeps_ok(); }

  /// (a/s) n, the size guaranteed by the coefficient set.
  Rational bound() const { return coefficients.ratio() * n; }
};

namespace detail {

/// Every vertex outside D has at least two neighbors in D.
inline bool two_dominates(const Graph& g, std::span<const Vertex> dom) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : dom) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (in[static_cast<std::size_t>(v)]) continue;
    int hits = 0;
    for (Vertex u : g.neighbors(v)) hits += in[static_cast<std::size_t>(u)];
    if (hits < 2) return false;
  }
  return true;
}

inline void require_min_degree(const Graph& g, int d, int floor_d) {
  if (d < floor_d)
    throw std::invalid_argument("d must be at least " + std::to_string(floor_d) + ", got " + std::to_string(d));
  if (g.n() > 0 && min_degree(g) < d)
    throw std::invalid_argument("minimum degree " + std::to_string(min_degree(g)) + " is below d = " +
                                std::to_string(d));
}

}  // namespace detail

/// Replays `batches` on a fresh coloring of g and records, batch by batch, the
/// exact weight before and after, whether the drop reached |batch| * s, and
/// whether the incrementally maintained state matches a recomputation.
/// Throws std::invalid_argument if a batch is empty or reselects a vertex.
inline RunCertificate certify_run(const Graph& g, const CoefficientSet& c, std::span<const Batch> batches) {
  c.validate();
  auto graph = std::make_shared<const Graph>(g);
  WeightTable table(c, g.max_degree());
  ColoredState st(graph);
  RunCertificate cert;
  cert.n = g.n();
  cert.coefficients = c;
  Rational weight = table.total(st);

  for (std::size_t k = 0; k < batches.size(); ++k) {
    const Batch& batch = batches[k];
    if (batch.vertices.empty()) throw std::invalid_argument("empty batch at step " + std::to_string(k));
    CertifiedStep step;
    step.batch = batch.vertices;
    step.rule = batch.rule;
    step.weight_before = weight;

    auto sorted = batch.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (k + 1 == batches.size() && sorted == st.vertices_of(Color::White)) {
      Rational x = st.class_size(Color::White, 0);
      Rational z2 = st.class_size(Color::Blue, 2);
      Rational z1 = st.class_size(Color::Blue, 1);
      step.sweep_ok = x * c.a + z2 * c.b[2] + z1 * c.b[1] >= x * c.s;
    }
    for (Vertex v : batch.vertices) {
      if (v < 0 || v >= g.n()) throw std::invalid_argument("batch vertex " + std::to_string(v) + " out of range");
      if (st.selected(v))
        throw std::invalid_argument("replay selects vertex " + std::to_string(v) + " twice");
      st.select(v);
    }
    weight = table.total(st);
    step.weight_after = weight;
    step.drop_ok = step.drop() >= c.s * static_cast<long>(batch.vertices.size());
    auto dom = st.dominating_set();
    step.state_consistent = st.same_coloring(ColoredState::from_selection(graph, dom));
    cert.steps.push_back(std::move(step));
  }
  cert.final_d = st.dominating_set();
  cert.valid_2dom = detail::two_dominates(g, cert.final_d);
  cert.bound_ok = c.s * static_cast<long>(cert.final_d.size()) <= c.a * g.n();
  return cert;
}

inline RunCertificate certify_run(const Graph& g, const CoefficientSet& c,
                                  const std::vector<std::vector<Vertex>>& batches) {
  std::vector<Batch> labeled;
  for (const auto& b : batches) labeled.push_back({b, ""});
  return certify_run(g, c, labeled);
}

// ---------------------------------------------------------------------------
// Instruction-list greedy

struct RuleRun {
  std::vector<Vertex> dominating_set;  // ascending
  std::vector<int> trace;              // fired instruction per step
  std::vector<Batch> batches;
};

namespace detail {

inline bool has_neighbor_of(const ColoredState& st, Vertex v, Color c) {
  for (Vertex u : st.graph().neighbors(v))
    if (st.color(u) == c) return true;
  return false;
}

/// First (v1, v2, u) in lexicographic order with v1, v2 adjacent white
/// vertices and u in N(v1) ∩ X_level not adjacent to v2; returns {v2, u}.
inline std::optional<std::vector<Vertex>> white_pair_with_private_blue(const ColoredState& st, int level) {
  const Graph& g = st.graph();
  for (Vertex v1 = 0; v1 < st.n(); ++v1) {
    if (st.color(v1) != Color::White) continue;
    for (Vertex v2 : g.neighbors(v1)) {
      if (st.color(v2) != Color::White) continue;
      for (Vertex u : g.neighbors(v1))
        if (st.color(u) == Color::Blue && st.wy_degree(u) == level && !g.adjacent(u, v2))
          return std::vector<Vertex>{v2, u};
    }
  }
  return std::nullopt;
}

/// Applies the first applicable instruction; returns its number and batch.
inline std::pair<int, std::vector<Vertex>> next_instruction(const ColoredState& st, int d) {
  const Graph& g = st.graph();
  const int level = st.white_yellow_level();
  if (level != kNoLevel && level >= d - 1) {
    if (auto v = st.first_member(Color::White, level)) return {1, {*v}};
    if (auto v = st.first_member(Color::Yellow, level + 1)) return {2, {*v}};
  }
  const int top_blue = st.max_level(Color::Blue);
  if (top_blue != kNoLevel && top_blue >= d + 1) return {3, {*st.first_member(Color::Blue, top_blue)}};

  const int k = st.white_yellow_blue_level();
  if (k != kNoLevel && k >= 2 && k <= d - 2) {
    if (auto v = st.first_member(Color::White, k)) return {4, {*v}};
    if (auto v = st.first_member(Color::Yellow, k + 1)) return {5, {*v}};
    if (auto v = st.first_member(Color::Blue, k + 2)) return {6, {*v}};
  }
  for (Vertex v = 0; v < st.n(); ++v)
    if (st.color(v) == Color::White && has_neighbor_of(st, v, Color::Yellow)) return {7, {v}};
  if (auto v = st.first_member(Color::Yellow, 2)) return {8, {*v}};
  if (auto pick = white_pair_with_private_blue(st, 3)) return {9, *pick};

  std::vector<Vertex> b3;
  for (Vertex v : st.members(Color::White, 1)) {
    b3.clear();
    for (Vertex u : g.neighbors(v))
      if (st.color(u) == Color::Blue && st.wy_degree(u) == 3) b3.push_back(u);
    if (b3.size() == 1) return {10, {v, b3.front()}};
  }
  for (Vertex v : st.members(Color::White, 1)) {
    b3.clear();
    for (Vertex u : g.neighbors(v))
      if (st.color(u) == Color::Blue && st.wy_degree(u) == 3) b3.push_back(u);
    if (b3.size() >= 2) return {11, {b3[0], b3[1]}};
  }
  if (auto v = st.first_member(Color::Blue, 3)) return {12, {*v}};
  if (auto v = st.first_member(Color::Yellow, 1)) return {13, {*v}};
  if (auto pick = white_pair_with_private_blue(st, 2)) return {14, *pick};
  for (Vertex v1 = 0; v1 < st.n(); ++v1) {
    if (st.color(v1) != Color::White) continue;
    for (Vertex v2 : g.neighbors(v1))
      if (st.color(v2) == Color::White) return {15, {v1, v2}};
  }
  for (Vertex v : st.members(Color::Blue, 2))
    if (has_neighbor_of(st, v, Color::Yellow)) return {16, {v}};
  for (Vertex v = 0; v < st.n(); ++v)
    if (st.color(v) == Color::Yellow) return {17, {v}};
  auto whites = st.vertices_of(Color::White);
  if (!whites.empty()) return {18, whites};
  return {0, {}};
}

}  // namespace detail

/// Builds a 2-dominating set by following, at every step, the first applicable
/// instruction of the fixed 18-instruction list. Requires d >= 6 and
/// min_degree(g) >= d. Instructions 9, 10, 11, 14 and 15 select two vertices,
/// instruction 18 every remaining white vertex; each is one batch.
inline RuleRun rule_greedy(const Graph& g, int d) {
  detail::require_min_degree(g, d, 6);
  ColoredState st = ColoredState::init(g);
  RuleRun run;
  while (!st.is_2_dominating()) {
    auto [rule, batch] = detail::next_instruction(st, d);
    if (rule == 0) throw InvariantViolation("no instruction applies to a state that is not 2-dominating");
    for (Vertex v : batch) st.select(v);
    run.trace.push_back(rule);
    run.batches.push_back({std::move(batch), "rule " + std::to_string(rule)});
  }
  run.dominating_set = st.dominating_set();
  return run;
}

// ---------------------------------------------------------------------------
// Weight greedy

struct WeightRun {
  std::vector<Vertex> dominating_set;
  std::vector<Batch> batches;
  RunCertificate certificate;
};

namespace detail {

/// Exact weight drops of tentative selections, evaluated locally: only the
/// vertices of N[N(v)] change color or WY-degree, so unless the state type
/// flips, the drop is a sum over that ball.
class DropEvaluator {
 public:
  explicit DropEvaluator(const WeightTable& table, int n) : table_(table), stamp_(static_cast<std::size_t>(n), 0) {}

  /// Weight drop of selecting v in `st`; `after` receives the resulting state.
  Rational drop(const ColoredState& st, StateType type, const Rational& total, Vertex v, ColoredState& after) {
    after = st;
    after.select(v);
    const StateType type_after = after.classify_type(table_.d());
    if (type_after != type) return total - table_.total(after);
    ++epoch_;
    Rational sum = 0;
    const Graph& g = st.graph();
    auto visit = [&](Vertex x) {
      auto& mark = stamp_[static_cast<std::size_t>(x)];
      if (mark == epoch_) return;
      mark = epoch_;
      sum += table_.vertex_weight(st, type, x);
      sum -= table_.vertex_weight(after, type_after, x);
    };
    visit(v);
    for (Vertex u : g.neighbors(v)) {
      visit(u);
      for (Vertex w : g.neighbors(u)) visit(w);
    }
    return sum;
  }

 private:
  const WeightTable& table_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
};

}  // namespace detail

/// Greedy on the weight function: selects the vertex whose selection lowers
/// the total weight the most. When no single vertex achieves a drop of s, the
/// best pair of vertices at distance at most 2 achieving 2s is taken; failing
/// that, every remaining white vertex is selected at once. Ties go to the
/// lowest index (lexicographically lowest pair).
inline WeightRun weight_greedy(const Graph& g, const CoefficientSet& c) {
  c.validate();
  detail::require_min_degree(g, c.d, 6);
  if (!check_conditions(c).overall)
    throw std::invalid_argument("coefficient set violates the bound conditions");

  WeightTable table(c, g.max_degree());
  ColoredState st = ColoredState::init(g);
  detail::DropEvaluator eval(table, g.n());
  WeightRun run;
  ColoredState scratch = st, scratch2 = st;
  const Rational two_s = 2 * c.s;

  while (!st.is_2_dominating()) {
    const StateType type = st.classify_type(c.d);
    const Rational total = table.total(st);

    std::optional<Vertex> best;
    Rational best_drop;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (st.selected(v)) continue;
      Rational dr = eval.drop(st, type, total, v, scratch);
      if (!best || dr > best_drop) {
        best = v;
        best_drop = dr;
      }
    }

    Batch batch;
    if (best && best_drop >= c.s) {
      batch = {{*best}, "greedy"};
    } else {
      std::optional<std::pair<Vertex, Vertex>> best_pair;
      Rational best_pair_drop;
      std::vector<unsigned> seen(static_cast<std::size_t>(g.n()), 0);
      unsigned epoch = 0;
      for (Vertex u = 0; u < g.n(); ++u) {
        if (st.selected(u)) continue;
        Rational first = eval.drop(st, type, total, u, scratch);
        ColoredState after_u = scratch;
        const StateType type_u = after_u.classify_type(c.d);
        const Rational total_u = total - first;
        ++epoch;
        std::vector<Vertex> ball;
        for (Vertex x : g.neighbors(u)) {
          if (seen[static_cast<std::size_t>(x)] != epoch) ball.push_back(x);
          seen[static_cast<std::size_t>(x)] = epoch;
          for (Vertex w : g.neighbors(x)) {
            if (seen[static_cast<std::size_t>(w)] != epoch) ball.push_back(w);
            seen[static_cast<std::size_t>(w)] = epoch;
          }
        }
        std::sort(ball.begin(), ball.end());
        for (Vertex v : ball) {
          if (v <= u || st.selected(v)) continue;
          Rational dr = first + eval.drop(after_u, type_u, total_u, v, scratch2);
          if (!best_pair || dr > best_pair_drop) {
            best_pair = {u, v};
            best_pair_drop = dr;
          }
        }
      }
      if (best_pair && best_pair_drop >= two_s) {
        batch = {{best_pair->first, best_pair->second}, "greedy-pair"};
      } else if (auto whites = st.vertices_of(Color::White); !whites.empty()) {
        batch = {std::move(whites), "sweep"};
      } else {
        batch = {{*best}, "greedy-fallback"};
      }
    }
    for (Vertex v : batch.vertices) st.select(v);
    run.batches.push_back(std::move(batch));
  }
  run.dominating_set = st.dominating_set();
  run.certificate = certify_run(g, c, run.batches);
  return run;
}

// ---------------------------------------------------------------------------
// Partition swap

/// Starts from the even/odd bipartition and repeatedly moves the lowest-index
/// vertex having more neighbors on its own side to the other side. Each move
/// increases the cut, so this terminates; afterwards every vertex has at least
/// ceil(deg/2) neighbors across, and for min degree >= 3 both sides are
/// 2-dominating.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> partition_swap(const Graph& g) {
  if (g.n() > 0 && min_degree(g) < 3)
    throw std::invalid_argument("partition swap needs minimum degree >= 3");
  const int n = g.n();
  std::vector<int> side(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = v % 2;
  std::vector<int> same(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) same[static_cast<std::size_t>(v)] += side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)];

  bool moved = true;
  while (moved) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (2 * same[vi] <= g.degree(v)) continue;
      side[vi] ^= 1;
      same[vi] = g.degree(v) - same[vi];
      for (Vertex u : g.neighbors(v)) {
        auto ui = static_cast<std::size_t>(u);
        same[ui] += side[ui] == side[vi] ? 1 : -1;
      }
      moved = true;
      break;
    }
  }
  std::pair<std::vector<Vertex>, std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

// ---------------------------------------------------------------------------
// Exact 2-domination number

namespace detail {

class Gamma2Search {
 public:
  explicit Gamma2Search(const Graph& g) : n_(g.n()), nbr_(static_cast<std::size_t>(g.n()), 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) nbr_[static_cast<std::size_t>(v)] |= bit(u);
  }

  /// Is there a 2-dominating set with at most `budget` vertices?
  bool feasible(int budget) { return dfs(0, budget, 0, 0); }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  // Vertices < i are decided: in `chosen` or in `excluded`.
  bool dfs(int i, int budget, std::uint64_t chosen, std::uint64_t excluded) {
    const std::uint64_t open = i >= 64 ? 0 : (~std::uint64_t{0} << i) & all();
    const std::uint64_t reach = budget > 0 ? open : 0;
    for (std::uint64_t rest = excluded; rest; rest &= rest - 1) {
      int x = std::countr_zero(rest);
      auto nx = nbr_[static_cast<std::size_t>(x)];
      int have = std::popcount(nx & chosen);
      if (have >= 2) continue;
      if (have + std::min(std::popcount(nx & reach), budget) < 2) return false;
    }
    if (i == n_) return true;
    if (budget == 0) return dfs(n_, 0, chosen, excluded | open);
    if (dfs(i + 1, budget - 1, chosen | bit(i), excluded)) return true;
    return dfs(i + 1, budget, chosen, excluded | bit(i));
  }

  std::uint64_t all() const { return n_ >= 64 ? ~std::uint64_t{0} : bit(n_) - 1; }

  int n_;
  std::vector<std::uint64_t> nbr_;
};

}  // namespace detail

/// γ₂(g) by search over increasing set sizes with neighborhood pruning.
/// Throws std::invalid_argument when n exceeds `limit_n` (at most 64).
inline int exact_gamma2(const Graph& g, int limit_n = 24) {
  if (limit_n > 64) throw std::invalid_argument("exact search supports at most 64 vertices");
  if (g.n() > limit_n)
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices; exact search limit is " +
                                std::to_string(limit_n));
  detail::Gamma2Search search(g);
  for (int k = 0; k <= g.n(); ++k)
    if (search.feasible(k)) return k;
  return g.n();
}

}  // namespace twodom
