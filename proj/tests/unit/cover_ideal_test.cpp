#include <gtest/gtest.h>

#include "coverq/cover_ideal.hpp"
#include "coverq/error.hpp"
#include "oracles.hpp"

using namespace coverq;

namespace {

std::set<std::set<std::string>> as_label_sets(const MonomialSet& s, const Graph& g) {
  std::set<std::set<std::string>> out;
  for (const auto& m : s) out.insert(oracle::support_labels(m, g));
  return out;
}

}  // namespace

TEST(MinimalVertexCovers, PathFour) {
  const auto g = path_graph(4);
  const auto al = g.alphabet();
  EXPECT_EQ(minimal_vertex_covers(g),
            (MonomialSet{parse_monomial("x1x3", al), parse_monomial("x2x3", al),
                         parse_monomial("x2x4", al)}));
}

TEST(MinimalVertexCovers, PathSevenMatchesTableRowAsSet) {
  const auto g = path_graph(7);
  const auto al = g.alphabet();
  std::vector<Monomial> row;
  for (const char* t : {"x2x4x6", "x1x3x4x6", "x1x3x5x6", "x2x3x5x6", "x1x3x5x7", "x2x3x5x7",
                        "x2x4x5x7"}) {
    row.push_back(parse_monomial(t, al));
  }
  EXPECT_EQ(minimal_vertex_covers(g), MonomialSet(row));
}

TEST(MinimalVertexCovers, EdgelessGraphHasUnitCover) {
  const auto s = minimal_vertex_covers(path_graph(1));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].is_unit());
}

TEST(MinimalVertexCovers, RefusesPastBound) {
  EXPECT_THROW(minimal_vertex_covers(path_graph(10), 8), GuardExceeded);
  EXPECT_NO_THROW(minimal_vertex_covers(path_graph(8), 8));
}

TEST(CoverIdeal, SmallPaths) {
  const auto j2 = cover_ideal(path_graph(2));
  const auto a2 = j2.graph().alphabet();
  EXPECT_EQ(j2.generators(), (MonomialSet{parse_monomial("x1", a2), parse_monomial("x2", a2)}));
  const auto j3 = cover_ideal(path_graph(3));
  const auto a3 = j3.graph().alphabet();
  EXPECT_EQ(j3.generators(), (MonomialSet{parse_monomial("x2", a3), parse_monomial("x1x3", a3)}));
}

TEST(CoverIdeal, Triangle) {
  const std::vector<std::string> labels{"a", "b", "c"};
  const auto j = cover_ideal(complete_graph(labels));
  const Alphabet al(labels);
  EXPECT_EQ(j.generators(), (MonomialSet{parse_monomial("ab", al), parse_monomial("ac", al),
                                         parse_monomial("bc", al)}));
}

TEST(CountGeneratorsPath, KnownValues) {
  EXPECT_EQ(count_generators_path(5), 4u);
  EXPECT_EQ(count_generators_path(7), 7u);
  EXPECT_EQ(count_generators_path(8), minimal_vertex_covers(path_graph(8)).size());
  EXPECT_EQ(count_generators_path(8), 9u);
  EXPECT_EQ(count_generators_path(18), 151u);
  EXPECT_THROW(count_generators_path(1), std::invalid_argument);
}

TEST(IsVertexCover, Basic) {
  const auto g = path_graph(3);
  const auto al = g.alphabet();
  EXPECT_TRUE(is_vertex_cover(g, parse_monomial("x2", al)));
  EXPECT_FALSE(is_vertex_cover(g, parse_monomial("x1", al)));
  EXPECT_THROW(is_vertex_cover(g, Monomial(2)), AlphabetMismatch);
}

TEST(CoverProperties, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 150; ++t) {
    const auto g = oracle::random_graph(1 + t % 10, 0.35, rng);
    EXPECT_EQ(as_label_sets(minimal_vertex_covers(g), g), oracle::vertex_covers(g)) << "trial " << t;
  }
}

TEST(CoverProperties, CoversMeetEveryEdgeAndAreMinimal) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_chordal(2 + seed % 12, seed);
    for (const auto& c : minimal_vertex_covers(g)) {
      EXPECT_TRUE(c.is_squarefree());
      for (auto [u, v] : g.edges()) EXPECT_TRUE(c[u] || c[v]);
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!c[v]) continue;
        const auto dropped = Monomial::from_mask(c.alphabet(), c.support() & ~(std::uint64_t{1} << v));
        EXPECT_FALSE(is_vertex_cover(g, dropped));
      }
    }
  }
}

TEST(CoverProperties, PathCountsMatchRecursionAndLocalRule) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto covers = minimal_vertex_covers(path_graph(n));
    EXPECT_EQ(covers.size(), count_generators_path(n)) << "n=" << n;
    if (n <= 16) {
      EXPECT_EQ(covers.size(), oracle::path_cover_count(n)) << "n=" << n;
    }
  }
}

TEST(CoverProperties, NoThreeConsecutivePathVertices) {
  for (std::size_t n = 3; n <= 18; ++n) {
    for (const auto& c : minimal_vertex_covers(path_graph(n))) {
      for (std::size_t i = 0; i + 2 < n; ++i) EXPECT_FALSE(c[i] && c[i + 1] && c[i + 2]);
    }
  }
}
