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
#include <charconv>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twodom/errors.hpp"

namespace twodom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate and reversed edges are merged;
  /// self-loops and out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      g.adj_[static_cast<std::size_t>(u)].push_back(v);
      g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return g;
  }

  int n() const noexcept { return static_cast<int>(adj_.size()); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    auto list = neighbors(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  int max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
  }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Smallest vertex degree. Throws std::invalid_argument on the empty graph.
inline int min_degree(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("minimum degree of the empty graph");
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses the edge-list text format: one "u v" pair per line, `#` comments,
/// and an optional leading header "n <count>" that may declare isolated vertices.
inline Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long declared = -1;
  long long max_index = -1;
  bool seen_content = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto toks = detail::split_ws(line);
    if (toks.size() == 2 && toks[0] == "n") {
      if (seen_content) throw ParseError(line_no, "header 'n <count>' must precede all edges");
      if (!detail::parse_int(toks[1], declared) || declared < 0)
        throw ParseError(line_no, "invalid vertex count '" + std::string(toks[1]) + "'");
      seen_content = true;
      continue;
    }
    long long u = 0, v = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v) || u < 0 ||
        v < 0 || u > std::numeric_limits<int>::max() - 1 || v > std::numeric_limits<int>::max() - 1)
      throw ParseError(line_no, "expected two non-negative integers, got '" + std::string(line) + "'");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    seen_content = true;
    max_index = std::max({max_index, u, v});
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  long long n = max_index + 1;
  if (declared >= 0) {
    if (declared < n)
      throw ParseError(0, "header declares n=" + std::to_string(declared) + " but vertex " +
                              std::to_string(max_index) + " appears");
    n = declared;
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// Inverse of parse_edge_list. Always emits the "n <count>" header so that
/// isolated vertices survive a round trip.
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(n, e);
}

/// K4 x K2: cliques on {0..3} and {4..7} joined by the matching (i, i+4).
inline Graph k4_box_k2() {
  std::vector<Edge> e;
  for (int side = 0; side < 2; ++side)
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v) e.emplace_back(4 * side + u, 4 * side + v);
  for (int i = 0; i < 4; ++i) e.emplace_back(i, i + 4);
  return Graph::from_edges(8, e);
}

/// Named constructions: "K<n>", "C<n>", "P<n>", "K4xK2".
inline Graph gen_named(std::string_view name) {
  if (name == "K4xK2") return k4_box_k2();
  auto bad = [&] { return std::invalid_argument("unknown graph name '" + std::string(name) + "'"); };
  if (name.size() < 2) throw bad();
  long long size = 0;
  if (!detail::parse_int(name.substr(1), size) || size < 0 || size > 100000) throw bad();
  int k = static_cast<int>(size);
  switch (name.front()) {
    case 'K': return complete_graph(k);
    case 'C': return cycle_graph(k);
    case 'P': return path_graph(k);
    default: throw bad();
  }
}

namespace detail {

/// Uniform integer in [0, bound) from a 64-bit engine, independent of the
/// standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do x = rng(); while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Random simple d-regular graph from the pairing model. Stubs are paired at
/// random; a pair that would form a loop or a repeated edge is rejected and
/// redrawn, and a pairing that gets stuck is restarted. Deterministic in `seed`.
inline Graph gen_random_regular(int n, int d, std::uint64_t seed, int max_restarts = 10000) {
  if (n < 0 || d < 0) throw std::invalid_argument("negative size or degree");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even for a d-regular graph");
  if (d >= n && !(n == 0 && d == 0)) throw std::invalid_argument("degree must be below n");
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<std::vector<Vertex>> partners(static_cast<std::size_t>(n));
    auto linked = [&](Vertex u, Vertex v) {
      const auto& list = partners[static_cast<std::size_t>(u)];
      return std::find(list.begin(), list.end(), v) != list.end();
    };
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (Vertex v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::vector<Edge> edges;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      // Try random draws first; fall back to an exhaustive suitability check.
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        auto i = detail::uniform_below(rng, stubs.size());
        auto j = detail::uniform_below(rng, stubs.size());
        Vertex u = stubs[i], v = stubs[j];
        if (i == j || u == v || linked(u, v)) continue;
        partners[static_cast<std::size_t>(u)].push_back(v);
        partners[static_cast<std::size_t>(v)].push_back(u);
        edges.emplace_back(u, v);
        if (i < j) std::swap(i, j);
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(i));
        stubs.erase(stubs.begin() + static_cast<std::ptrdiff_t>(j));
        placed = true;
      }
      if (placed) continue;
      bool any = false;
      for (std::size_t i = 0; i < stubs.size() && !any; ++i)
        for (std::size_t j = i + 1; j < stubs.size() && !any; ++j) {
          Vertex u = stubs[i], v = stubs[j];
          if (u != v && !linked(u, v)) any = true;
        }
      stuck = !any;
    }
    if (!stuck) return Graph::from_edges(n, edges);
  }
  throw GenerationError("random regular generation exceeded " + std::to_string(max_restarts) + " restarts");
}

}  // namespace twodom
