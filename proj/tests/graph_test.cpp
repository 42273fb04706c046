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

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "twodom/graph.hpp"

namespace twodom {
namespace {

void expect_simple_symmetric(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (Vertex u : nb) {
      EXPECT_NE(u, v);
      ASSERT_GE(u, 0);
      ASSERT_LT(u, g.n());
      EXPECT_TRUE(g.adjacent(u, v));
    }
  }
}

TEST(ParseEdgeList, Triangle) {
  Graph g = parse_edge_list("0 1\n1 2\n2 0");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(ParseEdgeList, EmptyInput) {
  Graph g = parse_edge_list("");
  EXPECT_EQ(g.n(), 0);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(ParseEdgeList, ReversedDuplicateMerged) {
  Graph g = parse_edge_list("0 1\n1 0");
  EXPECT_EQ(g.n(), 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(ParseEdgeList, CommentsAndHeader) {
  Graph g = parse_edge_list("# two edges and an isolated vertex\nn 5\n0 1\n\n  # indented comment\n2 3\n");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.degree(4), 0);
}

TEST(ParseEdgeList, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("-1 2\n"), ParseError);
}

TEST(ParseEdgeList, SelfLoopRejected) {
  try {
    parse_edge_list("0 1\n\n3 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseEdgeList, RoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = oracle::random_graph(15, 0.3, seed);
    Graph h = parse_edge_list(serialize_edge_list(g));
    EXPECT_EQ(g, h);
    EXPECT_EQ(g.edges(), h.edges());
  }
}

TEST(Graph, FromEdgesRejectsBadInput) {
  std::vector<Edge> loop{{1, 1}};
  std::vector<Edge> out_of_range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, out_of_range), std::invalid_argument);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(complete_graph(4)), 3);
  EXPECT_EQ(min_degree(path_graph(3)), 1);
  EXPECT_EQ(min_degree(k4_box_k2()), 4);
  EXPECT_THROW(min_degree(Graph{}), std::invalid_argument);
}

TEST(GenNamed, Examples) {
  Graph k4 = gen_named("K4");
  EXPECT_EQ(k4.n(), 4);
  EXPECT_EQ(k4.edge_count(), 6);

  Graph box = gen_named("K4xK2");
  EXPECT_EQ(box.n(), 8);
  EXPECT_EQ(box.edge_count(), 16);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(box.degree(v), 4);
  for (Vertex i = 0; i < 4; ++i) EXPECT_TRUE(box.adjacent(i, i + 4));
  EXPECT_FALSE(box.adjacent(0, 5));

  Graph c5 = gen_named("C5");
  EXPECT_EQ(c5.n(), 5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);

  EXPECT_EQ(gen_named("P4").edge_count(), 3);
  EXPECT_THROW(gen_named("Q3"), std::invalid_argument);
  EXPECT_THROW(gen_named("K"), std::invalid_argument);
}

TEST(RandomRegular, DegreesExact) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = gen_random_regular(8, 3, seed);
    for (Vertex v = 0; v < g.n(); ++v) EXPECT_EQ(g.degree(v), 3);
    expect_simple_symmetric(g);
  }
}

TEST(RandomRegular, OddProductRejected) {
  EXPECT_THROW(gen_random_regular(7, 3, 1), std::invalid_argument);
  EXPECT_THROW(gen_random_regular(5, 5, 1), std::invalid_argument);
}

TEST(RandomRegular, FourVerticesDegreeThreeIsK4) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(gen_random_regular(4, 3, seed), complete_graph(4));
}

TEST(RandomRegular, DeterministicPerSeed) {
  EXPECT_EQ(gen_random_regular(60, 7, 42), gen_random_regular(60, 7, 42));
  EXPECT_NE(gen_random_regular(60, 7, 42), gen_random_regular(60, 7, 43));
}

TEST(RandomRegular, SweepMinEqualsMax) {
  for (int d : {3, 6, 9, 12})
    for (int n : {20, 51, 200}) {
      if (n * d % 2) continue;
      Graph g = gen_random_regular(n, d, static_cast<std::uint64_t>(n * 31 + d));
      EXPECT_EQ(min_degree(g), d);
      EXPECT_EQ(g.max_degree(), d);
      expect_simple_symmetric(g);
    }
}

TEST(RandomRegular, DenseCaseTerminates) {
  Graph g = gen_random_regular(12, 10, 5);
  EXPECT_EQ(min_degree(g), 10);
}

}  // namespace
}  // namespace twodom
