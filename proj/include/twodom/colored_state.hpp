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

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "twodom/graph.hpp"

namespace twodom {

/// White: undominated. Yellow: one neighbor in D. Blue: two or more. Red: in D.
enum class Color : std::uint8_t { White = 0, Yellow = 1, Blue = 2, Red = 3 };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::White: return "white";
    case Color::Yellow: return "yellow";
    case Color::Blue: return "blue";
    case Color::Red: return "red";
  }
  return "?";
}

enum class StateType { Type1, Type2 };

/// Stand-in for the maximum of an empty set of levels.
inline constexpr int kNoLevel = std::numeric_limits<int>::min() / 4;

/// A graph together with a partial selection D and the induced coloring.
///
/// Tracks, for every vertex, its color and its WY-degree (number of white or
/// yellow neighbors), plus the size of every class W_i, Y_i, B_i. Selections
/// are applied incrementally; `from_selection` rebuilds the same data from the
/// definitions alone and is what the incremental path is checked against.
class ColoredState {
 public:
  explicit ColoredState(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {
    if (!graph_) throw std::invalid_argument("null graph");
    const int n = graph_->n();
    color_.assign(static_cast<std::size_t>(n), Color::White);
    wy_.resize(static_cast<std::size_t>(n));
    in_d_.assign(static_cast<std::size_t>(n), 0);
    for (auto& c : counts_) c.assign(static_cast<std::size_t>(graph_->max_degree() + 1), 0);
    for (Vertex v = 0; v < n; ++v) {
      wy_[static_cast<std::size_t>(v)] = graph_->degree(v);
      bump(Color::White, graph_->degree(v), +1);
    }
  }

  /// Fresh state with D empty; copies `g` into shared storage.
  static ColoredState init(const Graph& g) { return ColoredState(std::make_shared<const Graph>(g)); }

  /// Coloring of G^D computed directly from |N(v) ∩ D| for every v.
  static ColoredState from_selection(std::shared_ptr<const Graph> graph, std::span<const Vertex> selected) {
    ColoredState st(std::move(graph));
    const Graph& g = *st.graph_;
    const int n = g.n();
    for (auto& c : st.counts_) std::fill(c.begin(), c.end(), 0);
    std::fill(st.in_d_.begin(), st.in_d_.end(), 0);
    st.d_size_ = 0;
    for (Vertex v : selected) {
      if (v < 0 || v >= n) throw std::out_of_range("selected vertex out of range");
      if (!st.in_d_[static_cast<std::size_t>(v)]) ++st.d_size_;
      st.in_d_[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
      int dominators = 0;
      for (Vertex u : g.neighbors(v)) dominators += st.in_d_[static_cast<std::size_t>(u)];
      Color c = st.in_d_[static_cast<std::size_t>(v)] ? Color::Red
                : dominators == 0                      ? Color::White
                : dominators == 1                      ? Color::Yellow
                                                       : Color::Blue;
      st.color_[static_cast<std::size_t>(v)] = c;
    }
    for (Vertex v = 0; v < n; ++v) {
      int wy = 0;
      for (Vertex u : g.neighbors(v)) wy += st.is_white_or_yellow(u) ? 1 : 0;
      st.wy_[static_cast<std::size_t>(v)] = wy;
      if (st.color(v) != Color::Red) st.bump(st.color(v), wy, +1);
    }
    return st;
  }

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  int n() const noexcept { return graph_->n(); }

  Color color(Vertex v) const { return color_[static_cast<std::size_t>(v)]; }
  int wy_degree(Vertex v) const { return wy_[static_cast<std::size_t>(v)]; }
  bool selected(Vertex v) const { return in_d_[static_cast<std::size_t>(v)] != 0; }
  bool is_white_or_yellow(Vertex v) const {
    auto c = color(v);
    return c == Color::White || c == Color::Yellow;
  }
  int selected_count() const noexcept { return d_size_; }

  /// D in ascending order.
  std::vector<Vertex> dominating_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n(); ++v)
      if (selected(v)) out.push_back(v);
    return out;
  }

  /// |X_i| for X in {W, Y, B}; zero for Red or out-of-range i.
  int class_size(Color c, int i) const {
    if (c == Color::Red || i < 0) return 0;
    const auto& bucket = counts_[static_cast<std::size_t>(c)];
    return i < static_cast<int>(bucket.size()) ? bucket[static_cast<std::size_t>(i)] : 0;
  }

  int color_count(Color c) const {
    if (c == Color::Red) return d_size_;
    int total = 0;
    for (int k : counts_[static_cast<std::size_t>(c)]) total += k;
    return total;
  }

  /// Largest i with X_i non-empty, or kNoLevel.
  int max_level(Color c) const {
    if (c == Color::Red) return kNoLevel;
    const auto& bucket = counts_[static_cast<std::size_t>(c)];
    for (int i = static_cast<int>(bucket.size()) - 1; i >= 0; --i)
      if (bucket[static_cast<std::size_t>(i)] > 0) return i;
    return kNoLevel;
  }

  /// max{i : W_i ∪ Y_{i+1} non-empty}.
  int white_yellow_level() const {
    int w = max_level(Color::White), y = max_level(Color::Yellow);
    return std::max(w, y == kNoLevel ? kNoLevel : y - 1);
  }

  /// max{i : W_i ∪ Y_{i+1} ∪ B_{i+2} non-empty}.
  int white_yellow_blue_level() const {
    int b = max_level(Color::Blue);
    return std::max(white_yellow_level(), b == kNoLevel ? kNoLevel : b - 2);
  }

  /// Members of X_i in ascending vertex order.
  std::vector<Vertex> members(Color c, int i) const {
    std::vector<Vertex> out;
    if (class_size(c, i) == 0) return out;
    for (Vertex v = 0; v < n(); ++v)
      if (color(v) == c && wy_degree(v) == i) out.push_back(v);
    return out;
  }

  std::optional<Vertex> first_member(Color c, int i) const {
    if (class_size(c, i) == 0) return std::nullopt;
    for (Vertex v = 0; v < n(); ++v)
      if (color(v) == c && wy_degree(v) == i) return v;
    return std::nullopt;
  }

  std::vector<Vertex> vertices_of(Color c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n(); ++v)
      if (color(v) == c) out.push_back(v);
    return out;
  }

  /// Type 1 iff some white vertex has WY-degree >= d+1 or some yellow vertex
  /// has WY-degree >= d+2.
  StateType classify_type(int d) const {
    int level = white_yellow_level();
    return (level != kNoLevel && level >= d + 1) ? StateType::Type1 : StateType::Type2;
  }

  /// True iff every vertex outside D has at least two neighbors in D.
  bool is_2_dominating() const {
    return color_count(Color::White) == 0 && color_count(Color::Yellow) == 0;
  }

  /// Puts v into D and recolors: v turns red, white neighbors turn yellow,
  /// yellow neighbors turn blue. Every vertex that leaves W ∪ Y lowers the
  /// WY-degree of each of its neighbors by one.
  void select(Vertex v) {
    if (v < 0 || v >= n()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (selected(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is already in D");
    const Color before = color(v);
    bump(before, wy_degree(v), -1);
    set_color(v, Color::Red);
    in_d_[static_cast<std::size_t>(v)] = 1;
    ++d_size_;

    left_.clear();
    if (before == Color::White || before == Color::Yellow) left_.push_back(v);
    for (Vertex u : graph_->neighbors(v)) {
      Color cu = color(u);
      if (cu == Color::White) {
        recolor(u, Color::Yellow);
      } else if (cu == Color::Yellow) {
        recolor(u, Color::Blue);
        left_.push_back(u);
      }
    }
    for (Vertex x : left_)
      for (Vertex w : graph_->neighbors(x)) lower_wy(w);
  }

  /// Color, WY-degree and D agree vertex by vertex.
  bool same_coloring(const ColoredState& other) const {
    return color_ == other.color_ && wy_ == other.wy_ && in_d_ == other.in_d_ && counts_ == other.counts_;
  }

 private:
  void bump(Color c, int wy, int delta) {
    if (c == Color::Red) return;
    counts_[static_cast<std::size_t>(c)][static_cast<std::size_t>(wy)] += delta;
  }
  void set_color(Vertex v, Color c) { color_[static_cast<std::size_t>(v)] = c; }
  void recolor(Vertex v, Color c) {
    bump(color(v), wy_degree(v), -1);
    set_color(v, c);
    bump(c, wy_degree(v), +1);
  }
  void lower_wy(Vertex w) {
    Color c = color(w);
    bump(c, wy_degree(w), -1);
    --wy_[static_cast<std::size_t>(w)];
    bump(c, wy_degree(w), +1);
  }

  std::shared_ptr<const Graph> graph_;
  std::vector<Color> color_;
  std::vector<int> wy_;
  std::vector<char> in_d_;
  std::array<std::vector<int>, 3> counts_;
  int d_size_ = 0;
  std::vector<Vertex> left_;  // scratch for select()
};

}  // namespace twodom
