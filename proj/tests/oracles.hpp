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

// Slow reference implementations written straight from the definitions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "twodom/twodom.hpp"

namespace twodom::oracle {

inline int dominators(const Graph& g, Vertex v, const std::vector<char>& in) {
  int c = 0;
  for (Vertex u : g.neighbors(v)) c += in[static_cast<std::size_t>(u)];
  return c;
}

inline bool is_2dom(const Graph& g, const std::vector<Vertex>& dom) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : dom) in[static_cast<std::size_t>(v)] = 1;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in[static_cast<std::size_t>(v)] && dominators(g, v, in) < 2) return false;
  return true;
}

/// Minimum 2-dominating set size over all 2^n subsets.
inline int brute_gamma2(const Graph& g) {
  const int n = g.n();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    std::vector<Vertex> dom;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) dom.push_back(v);
    if (is_2dom(g, dom)) best = size;
  }
  return best;
}

struct Coloring {
  std::vector<Color> color;
  std::vector<int> wy;
};

inline Coloring coloring(const Graph& g, const std::vector<Vertex>& dom) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : dom) in[static_cast<std::size_t>(v)] = 1;
  Coloring c;
  for (Vertex v = 0; v < g.n(); ++v) {
    int k = dominators(g, v, in);
    c.color.push_back(in[static_cast<std::size_t>(v)] ? Color::Red
                      : k == 0                         ? Color::White
                      : k == 1                         ? Color::Yellow
                                                       : Color::Blue);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    int k = 0;
    for (Vertex u : g.neighbors(v)) {
      Color cu = c.color[static_cast<std::size_t>(u)];
      k += cu == Color::White || cu == Color::Yellow;
    }
    c.wy.push_back(k);
  }
  return c;
}

inline bool type1(const Coloring& col, int d) {
  for (std::size_t v = 0; v < col.color.size(); ++v) {
    if (col.color[v] == Color::White && col.wy[v] >= d + 1) return true;
    if (col.color[v] == Color::Yellow && col.wy[v] - 1 >= d + 1) return true;
  }
  return false;
}

/// Weight of one vertex, from the two tables.
inline Rational weight(Color color, int i, bool is_type1, const CoefficientSet& c) {
  const int d = c.d;
  const Rational g = c.s - c.a;
  if (color == Color::Red) return 0;
  if (color == Color::White) return c.a;
  if (is_type1) {
    if (color == Color::Yellow) return i >= d ? Rational(c.a - g / (i + 1)) : Rational(c.a - g / (d + 1));
    if (i > d) return c.a - g / (i + 2) - g / i;
    if (i == d) return c.a - g / (d + 2) - g / (d + 1);
    return c.a - 2 * g / (d + 1);
  }
  if (color == Color::Yellow) return c.y[static_cast<std::size_t>(std::min(i, d + 1))];
  return c.b[static_cast<std::size_t>(std::min(i, d + 1))];
}

inline std::vector<Rational> weights(const Graph& g, const std::vector<Vertex>& dom, const CoefficientSet& c) {
  auto col = coloring(g, dom);
  bool t1 = type1(col, c.d);
  std::vector<Rational> w;
  for (Vertex v = 0; v < g.n(); ++v)
    w.push_back(weight(col.color[static_cast<std::size_t>(v)], col.wy[static_cast<std::size_t>(v)], t1, c));
  return w;
}

inline Rational total(const Graph& g, const std::vector<Vertex>& dom, const CoefficientSet& c) {
  Rational t = 0;
  for (const auto& w : weights(g, dom, c)) t += w;
  return t;
}

/// Erdős–Rényi style graph on n vertices with edge probability p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace twodom::oracle
