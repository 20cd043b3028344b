#include <gtest/gtest.h>

#include "coverq/cover_ideal.hpp"
#include "coverq/error.hpp"
#include "coverq/properties.hpp"
#include "coverq/rooted_list.hpp"
#include "oracles.hpp"

using namespace coverq;

namespace {

std::vector<std::string> rendered(const RootedList& rl) {
  std::vector<std::string> out;
  const auto al = rl.graph().alphabet();
  for (const auto& m : rl.entries()) out.push_back(render(m, al));
  return out;
}

Graph example_graph() {
  const std::vector<std::string> v{"a", "b", "c", "d", "e", "f"};
  const std::vector<std::pair<std::string, std::string>> e{
      {"a", "b"}, {"a", "c"}, {"b", "c"}, {"b", "e"}, {"c", "e"},
      {"b", "d"}, {"d", "e"}, {"d", "f"}, {"e", "f"}};
  return make_graph(v, e);
}

using Rows = std::vector<std::string>;

}  // namespace

TEST(RootedListPath, SmallRows) {
  EXPECT_EQ(rendered(rooted_list_path(2)), (Rows{"x1", "x2"}));
  EXPECT_EQ(rendered(rooted_list_path(3)), (Rows{"x2", "x1x3"}));
  EXPECT_EQ(rendered(rooted_list_path(4)), (Rows{"x1x3", "x2x3", "x2x4"}));
  EXPECT_EQ(rendered(rooted_list_path(5)), (Rows{"x2x4", "x1x3x4", "x1x3x5", "x2x3x5"}));
  EXPECT_EQ(rendered(rooted_list_path(6)),
            (Rows{"x1x3x5", "x2x3x5", "x2x4x5", "x2x4x6", "x1x3x4x6"}));
  EXPECT_EQ(rendered(rooted_list_path(7)), (Rows{"x2x4x6", "x1x3x4x6", "x1x3x5x6", "x2x3x5x6",
                                                 "x1x3x5x7", "x2x3x5x7", "x2x4x5x7"}));
}

TEST(RootedListPath, RejectsShortPaths) {
  EXPECT_THROW(rooted_list_path(1), std::invalid_argument);
  EXPECT_THROW(rooted_list_path(0), std::invalid_argument);
}

TEST(RootedListPath, ProvenanceFollowsRecursion) {
  const auto rl = rooted_list_path(7);
  // R(P_7) = x6 R(P_5), x7 x5 R(P_4): four left entries, three right.
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(rl.provenance(k).front(), 'L');
  for (std::size_t k = 4; k < 7; ++k) EXPECT_EQ(rl.provenance(k).front(), 'R');
}

TEST(RootedListPath, BranchesPartitionTheList) {
  for (std::size_t n = 7; n <= 13; ++n) {
    const auto rl = rooted_list_path(n);
    const auto al = rl.graph().alphabet();
    // Branch by definition: A = x_{n-1}x_{n-3}R(P_{n-4}), B = x_{n-1}x_{n-2}x_{n-4}R(P_{n-5}),
    // C = x_n x_{n-2} x_{n-4} R(P_{n-5}), D = x_n x_{n-2} x_{n-3} x_{n-5} R(P_{n-6}).
    auto x = [&](std::size_t i) { return Monomial::variable(n, i - 1); };
    auto lift = [&](std::size_t m, const Monomial& lead) {
      std::vector<Monomial> out;
      if (m < 2) {
        out.push_back(lead);
        return out;
      }
      const auto base = rooted_list_path(m);
      for (const auto& e : base.entries()) out.push_back(e.extended(n) * lead);
      return out;
    };
    std::vector<Monomial> expect;
    std::vector<char> tags;
    auto push = [&](const std::vector<Monomial>& part, char tag) {
      for (const auto& m : part) {
        expect.push_back(m);
        tags.push_back(tag);
      }
    };
    push(lift(n - 4, x(n - 1) * x(n - 3)), 'A');
    push(lift(n - 5, x(n - 1) * x(n - 2) * x(n - 4)), 'B');
    push(lift(n - 5, x(n) * x(n - 2) * x(n - 4)), 'C');
    push(lift(n - 6, x(n) * x(n - 2) * x(n - 3) * x(n - 5)), 'D');
    ASSERT_EQ(std::vector<Monomial>(rl.entries().begin(), rl.entries().end()), expect)
        << "n=" << n << " first " << render(rl[0], al);
    for (std::size_t k = 0; k < rl.size(); ++k) EXPECT_EQ(to_char(path_branch(rl, k)), tags[k]);
  }
}

TEST(RootedListChordal, KTwo) {
  const std::vector<std::string> labels{"a", "b"};
  const auto rl = rooted_list_chordal(complete_graph(labels), PivotStrategy::lowest());
  EXPECT_EQ(rendered(rl), (Rows{"b", "a"}));
}

TEST(RootedListChordal, ExampleGraphWithPriority) {
  // Pivot a with N[a] ordered a, b, c; inside the triangle d, e, f the pivot
  // is f, giving de, ef, df for G \ N[a].
  const auto rl = rooted_list_chordal(example_graph(),
                                      PivotStrategy::priority({"a", "f", "b", "c", "d", "e"}));
  EXPECT_EQ(rendered(rl), (Rows{"bcde", "bcef", "bcdf", "acde", "abde", "abef"}));
  EXPECT_EQ(rl.provenance(0), "a>f");
  EXPECT_EQ(rl.provenance(3), "b");
}

TEST(RootedListChordal, ExampleGraphCanonicalStrategies) {
  const auto g = example_graph();
  EXPECT_EQ(rendered(rooted_list_chordal(g, PivotStrategy::lowest())),
            (Rows{"bcef", "bcdf", "bcde", "acde", "abef", "abde"}));
  EXPECT_EQ(rendered(rooted_list_chordal(g, PivotStrategy::highest())),
            (Rows{"abde", "acde", "bcde", "bcdf", "abef", "bcef"}));
}

TEST(RootedListChordal, HighestStrategyReproducesPathList) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto chordal = rooted_list_chordal(path_graph(n), PivotStrategy::highest());
    const auto path = rooted_list_path(n);
    EXPECT_TRUE(std::equal(chordal.entries().begin(), chordal.entries().end(),
                           path.entries().begin(), path.entries().end()))
        << "n=" << n;
  }
}

TEST(RootedListChordal, RejectsNonChordal) {
  GraphBuilder b;
  b.add_edge("p", "q");
  b.add_edge("q", "r");
  b.add_edge("r", "s");
  b.add_edge("s", "p");
  try {
    rooted_list_chordal(b.build());
    FAIL() << "expected NotChordal";
  } catch (const NotChordal& e) {
    EXPECT_EQ(e.cycle().size(), 4u);
  }
}

TEST(RootedListChordal, RejectsBadPriority) {
  EXPECT_THROW(rooted_list_chordal(example_graph(), PivotStrategy::priority({"a", "z"})),
               std::invalid_argument);
  EXPECT_THROW(rooted_list_chordal(example_graph(), PivotStrategy::priority({"a", "a"})),
               std::invalid_argument);
}

TEST(RootedListChordal, EdgelessGraphIsUnit) {
  const auto rl = rooted_list_chordal(path_graph(1));
  ASSERT_EQ(rl.size(), 1u);
  EXPECT_TRUE(rl[0].is_unit());
}

TEST(RootedListChordal, IsolatedVerticesDoNotChangeTheList) {
  GraphBuilder b;
  b.add_vertex("z");
  b.add_edge("a", "b");
  b.add_edge("b", "c");
  const auto rl = rooted_list_chordal(b.build());
  EXPECT_EQ(rendered(rl), (Rows{"b", "ac"}));
}

TEST(PivotStrategy, Names) {
  EXPECT_EQ(PivotStrategy::lowest().name(), "lowest");
  EXPECT_EQ(PivotStrategy::highest().name(), "highest");
  EXPECT_EQ(PivotStrategy::priority({"a", "f"}).name(), "explicit:a,f");
}

// Oracle equality.

TEST(RootedListProperties, PathEntriesAreTheMinimalCovers) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto rl = rooted_list_path(n);
    std::set<std::set<std::string>> got;
    for (const auto& m : rl.entries()) got.insert(oracle::support_labels(m, rl.graph()));
    EXPECT_EQ(got.size(), rl.size()) << "duplicate entries at n=" << n;
    if (n <= 16) {
      EXPECT_EQ(got, oracle::vertex_covers(rl.graph())) << "n=" << n;
    } else {
      EXPECT_EQ(MonomialSet(std::vector<Monomial>(rl.entries().begin(), rl.entries().end())),
                minimal_vertex_covers(rl.graph()))
          << "n=" << n;
    }
  }
}

TEST(RootedListProperties, ChordalEntriesAreTheMinimalCovers) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = random_chordal(1 + seed % 12, seed * 7919);
    for (const auto& strategy : sample_strategies(g, seed)) {
      const auto rl = rooted_list_chordal(g, strategy);
      std::set<std::set<std::string>> got;
      for (const auto& m : rl.entries()) got.insert(oracle::support_labels(m, g));
      EXPECT_EQ(got.size(), rl.size()) << "seed " << seed << " " << strategy.name();
      EXPECT_EQ(got, oracle::vertex_covers(g)) << "seed " << seed << " " << strategy.name();
    }
  }
}

TEST(RootedListProperties, OnceDivisibleByLastOrThirdLastStaysDivisible) {
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto rl = rooted_list_path(n);
    for (std::size_t var : {n - 1, n - 3}) {
      if (var >= n) continue;
      bool seen = false;
      for (const auto& m : rl.entries()) {
        if (seen) {
          EXPECT_TRUE(m[var] > 0) << "n=" << n << " var x" << var + 1;
        }
        seen = seen || m[var] > 0;
      }
    }
  }
}
