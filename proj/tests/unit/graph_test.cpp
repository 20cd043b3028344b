#include <gtest/gtest.h>

#include <random>

#include "coverq/error.hpp"
#include "coverq/graph.hpp"
#include "oracles.hpp"

using namespace coverq;

namespace {

Graph example_graph() {
  const std::vector<std::string> v{"a", "b", "c", "d", "e", "f"};
  const std::vector<std::pair<std::string, std::string>> e{
      {"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "e"}, {"c", "e"},
      {"b", "d"}, {"d", "e"}, {"d", "f"}, {"e", "f"}};
  return make_graph(v, e);
}

Graph four_cycle() {
  GraphBuilder b;
  b.add_edge("x1", "x2");
  b.add_edge("x2", "x3");
  b.add_edge("x3", "x4");
  b.add_edge("x4", "x1");
  return b.build();
}

}  // namespace

TEST(PathGraph, FourVertices) {
  const auto g = path_graph(4);
  ASSERT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.label(0), "x1");
  EXPECT_EQ(g.label(3), "x4");
}

TEST(PathGraph, SingleVertexHasNoEdges) {
  const auto g = path_graph(1);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(PathGraph, SevenVerticesShape) {
  const auto g = path_graph(7);
  EXPECT_EQ(g.edge_count(), 6u);
  std::size_t leaves = 0;
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < 7; ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    if (g.degree(v) == 1) ++leaves;
  }
  EXPECT_EQ(max_deg, 2u);
  EXPECT_EQ(leaves, 2u);
}

TEST(PathGraph, RejectsZero) { EXPECT_THROW(path_graph(0), std::invalid_argument); }

TEST(GraphBuilder, RejectsSelfLoopAndDuplicateEdge) {
  GraphBuilder b;
  EXPECT_THROW(b.add_edge("a", "a"), std::invalid_argument);
  b.add_edge("a", "b");
  EXPECT_THROW(b.add_edge("b", "a"), std::invalid_argument);
}

TEST(GraphBuilder, KeepsInsertionOrder) {
  GraphBuilder b;
  b.add_vertex("z");
  b.add_edge("m", "a");
  const auto g = b.build();
  EXPECT_EQ(std::vector<std::string>(g.vertices().begin(), g.vertices().end()),
            (std::vector<std::string>{"z", "m", "a"}));
  EXPECT_THROW(g.index_of("q"), std::invalid_argument);
}

TEST(Chordal, PathIsChordal) { EXPECT_TRUE(is_chordal(path_graph(9))); }

TEST(Chordal, FourCycleIsNot) {
  const auto g = four_cycle();
  EXPECT_FALSE(is_chordal(g));
  const auto cycle = chordless_cycle(g);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_EQ(cycle->size(), 4u);
}

TEST(Chordal, ExampleGraphIsChordal) {
  const auto g = example_graph();
  EXPECT_TRUE(is_chordal(g));
  const auto peo = perfect_elimination_ordering(g);
  ASSERT_TRUE(peo.has_value());
  EXPECT_TRUE(is_perfect_elimination_ordering(g, *peo));
  EXPECT_FALSE(chordless_cycle(g).has_value());
}

TEST(Chordal, PerfectEliminationOrderingCheckRejectsBadOrder) {
  // In the example graph b's later neighbours {a, d, ...} are not a clique
  // if b is eliminated first.
  const auto g = example_graph();
  const std::vector<std::size_t> order{1, 0, 2, 3, 4, 5};
  EXPECT_FALSE(is_perfect_elimination_ordering(g, order));
}

TEST(Simplicial, PathEndpoints) {
  EXPECT_EQ(simplicial_vertices(path_graph(5)), (std::vector<std::string>{"x1", "x5"}));
}

TEST(Simplicial, ExampleVertexA) {
  const auto g = example_graph();
  const auto s = simplicial_vertices(g);
  EXPECT_NE(std::find(s.begin(), s.end(), "a"), s.end());
  const auto nb = g.neighbors(g.index_of("a"));
  ASSERT_EQ(nb.size(), 2u);
  EXPECT_EQ(g.label(nb[0]), "b");
  EXPECT_EQ(g.label(nb[1]), "c");
}

TEST(Simplicial, TriangleAllVertices) {
  const std::vector<std::string> labels{"a", "b", "c"};
  EXPECT_EQ(simplicial_vertices(complete_graph(labels)), labels);
}

TEST(RemoveClosedNeighborhood, ExampleVertexAGivesTriangleDef) {
  const auto h = remove_closed_neighborhood(example_graph(), "a");
  EXPECT_EQ(std::vector<std::string>(h.vertices().begin(), h.vertices().end()),
            (std::vector<std::string>{"d", "e", "f"}));
  EXPECT_EQ(h.edge_count(), 3u);
}

TEST(RemoveClosedNeighborhood, PathTail) {
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto h = remove_closed_neighborhood(path_graph(n), "x" + std::to_string(n));
    EXPECT_EQ(h, path_graph(n - 2)) << "n=" << n;
  }
}

TEST(RemoveClosedNeighborhood, SingleVertexLeavesEmptyGraph) {
  EXPECT_TRUE(remove_closed_neighborhood(path_graph(1), "x1").empty());
}

TEST(RandomChordal, SingleVertex) {
  const auto g = random_chordal(1, 5);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(RandomChordal, DeterministicForSeed) {
  const auto a = random_chordal(8, 1);
  const auto b = random_chordal(8, 1);
  EXPECT_TRUE(is_chordal(a));
  EXPECT_EQ(a.edges(), b.edges());
  EXPECT_EQ(a, b);
}

// Properties over many seeds.

TEST(GraphProperties, RandomChordalIsChordalWithSimplicialVertex) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_chordal(1 + seed % 16, seed);
    ASSERT_TRUE(is_chordal(g)) << "seed " << seed;
    ASSERT_FALSE(simplicial_vertices(g).empty()) << "seed " << seed;
    const auto peo = perfect_elimination_ordering(g);
    ASSERT_TRUE(peo && is_perfect_elimination_ordering(g, *peo));
  }
}

TEST(GraphProperties, SimplicialMatchesPairwiseAdjacency) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(1 + trial % 9, 0.45, rng);
    const auto s = simplicial_vertices(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      bool clique = true;
      for (auto a : g.neighbors(v)) {
        for (auto b : g.neighbors(v)) {
          if (a != b && !g.adjacent(a, b)) clique = false;
        }
      }
      const bool listed = std::find(s.begin(), s.end(), g.label(v)) != s.end();
      EXPECT_EQ(listed, clique) << "trial " << trial << " vertex " << g.label(v);
    }
  }
}

TEST(GraphProperties, ChordalityAgreesWithCycleSearch) {
  // Independent check: a graph is chordal iff repeatedly deleting simplicial
  // vertices empties it.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(2 + trial % 8, 0.4, rng);
    const bool chordal = is_chordal(g);
    EXPECT_EQ(chordal, !chordless_cycle(g).has_value());
    Graph h = g;
    while (!h.empty()) {
      std::optional<std::size_t> s;
      for (std::size_t v = 0; v < h.vertex_count() && !s; ++v) {
        if (is_simplicial(h, v)) s = v;
      }
      if (!s) break;
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < h.vertex_count(); ++v) {
        if (v != *s) keep.push_back(v);
      }
      h = h.induced(keep);
    }
    EXPECT_EQ(chordal, h.empty()) << "trial " << trial;
  }
}

TEST(GraphProperties, RemoveClosedNeighborhoodKeepsRemainingEdges) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_chordal(2 + seed % 10, seed);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const auto h = remove_closed_neighborhood(g, g.label(v));
      EXPECT_FALSE(h.find(g.label(v)).has_value());
      for (auto w : g.neighbors(v)) EXPECT_FALSE(h.find(g.label(w)).has_value());
      for (auto [a, b] : g.edges()) {
        const auto ha = h.find(g.label(a));
        const auto hb = h.find(g.label(b));
        if (ha && hb) {
          EXPECT_TRUE(h.adjacent(*ha, *hb));
        }
      }
      for (auto [a, b] : h.edges()) {
        EXPECT_TRUE(g.adjacent(g.index_of(h.label(a)), g.index_of(h.label(b))));
      }
    }
  }
}
