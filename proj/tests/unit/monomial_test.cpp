#include <gtest/gtest.h>

#include <random>

#include "coverq/error.hpp"
#include "coverq/monomial.hpp"
#include "oracles.hpp"

using namespace coverq;

namespace {

const Alphabet kP5 = Alphabet::indexed(5);

Monomial m5(std::string_view text) { return parse_monomial(text, kP5); }

}  // namespace

TEST(Monomial, MultiplyAddsExponents) {
  EXPECT_EQ(m5("x2x4") * m5("x1x3x4"), m5("x1x2x3x4^2"));
  EXPECT_EQ(render(m5("x2x4") * m5("x1x3x4"), kP5), "x1x2x3x4^2");
}

TEST(Monomial, UnitIsIdentity) {
  const auto u = m5("x1x3x5");
  EXPECT_EQ(u * Monomial(5), u);
  EXPECT_TRUE(Monomial(5).is_unit());
  EXPECT_EQ(render(Monomial(5), kP5), "1");
  EXPECT_EQ(parse_monomial("1", kP5), Monomial(5));
}

TEST(Monomial, Square) { EXPECT_EQ(pow(m5("x2x4"), 2), m5("x2^2x4^2")); }

TEST(Monomial, MismatchedAlphabetsThrow) {
  EXPECT_THROW(Monomial(3) * Monomial(4), AlphabetMismatch);
}

TEST(Monomial, ExponentOverflowThrows) {
  const auto big = Monomial::from_exponents({200, 0});
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Divides, Basic) {
  EXPECT_TRUE(divides(m5("x1x3"), m5("x1x3x5")));
  EXPECT_FALSE(divides(m5("x2"), m5("x1x3")));
  EXPECT_TRUE(strictly_divides(m5("x1x3"), m5("x1x3x5")));
  EXPECT_FALSE(strictly_divides(m5("x1x3"), m5("x1x3")));
}

TEST(Divides, ProductsOverPathFive) {
  // u1 u3 = x2x4 * x1x3x5 and u2 u4 = x1x3x4 * x2x3x5.
  EXPECT_TRUE(divides(m5("x2x4") * m5("x1x3x5"), m5("x1x3x4") * m5("x2x3x5")));
}

TEST(Colon, Examples) {
  EXPECT_EQ(colon(m5("x2x4"), m5("x1x3x4")), m5("x2"));
  EXPECT_EQ(colon(m5("x1x3x4"), m5("x1x3x4")), Monomial(5));
  EXPECT_EQ(colon(m5("x1x3x4"), m5("x2x3x5")), m5("x1x4"));
}

TEST(Minimalize, DropsMultiples) {
  const Alphabet ab = Alphabet::indexed(2);
  const auto x1 = parse_monomial("x1", ab);
  const auto x2 = parse_monomial("x2", ab);
  const auto s = minimalize(std::vector<Monomial>{x1, parse_monomial("x1x2", ab), x2});
  EXPECT_TRUE(s.minimal());
  EXPECT_EQ(s, (MonomialSet{x1, x2}));
}

TEST(Minimalize, Singleton) {
  const auto u = m5("x1x3");
  EXPECT_EQ(minimalize(std::vector<Monomial>{u}), MonomialSet{u});
}

TEST(Minimalize, PathFiveSecondPowerDropsOneProduct) {
  const std::vector<Monomial> gens{m5("x2x4"), m5("x1x3x4"), m5("x1x3x5"), m5("x2x3x5")};
  std::vector<Monomial> products;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) products.push_back(gens[i] * gens[j]);
  }
  ASSERT_EQ(products.size(), 10u);
  const auto g = minimalize(products);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_FALSE(g.contains(gens[1] * gens[3]));
}

TEST(Degree, Examples) {
  const Alphabet p7 = Alphabet::indexed(7);
  EXPECT_EQ(total_degree(parse_monomial("x2x3x5x7", p7)), 4u);
  EXPECT_EQ(total_degree(Monomial(7)), 0u);
  EXPECT_EQ(total_degree(m5("x2^2x4^2")), 4u);
}

TEST(Render, StarredStyleRoundTrips) {
  const auto m = m5("x1x3^2x4");
  EXPECT_EQ(render(m, kP5, RenderStyle::Starred), "x1*x3^2*x4");
  EXPECT_EQ(parse_monomial("x1*x3^2*x4", kP5), m);
}

TEST(Render, NamedAlphabet) {
  const Alphabet abc(std::vector<std::string>{"a", "b", "c"});
  const auto m = parse_monomial("a^2bc", abc);
  EXPECT_EQ(m, Monomial::from_exponents({2, 1, 1}));
  EXPECT_EQ(render(m, abc), "a^2bc");
}

TEST(Parse, RejectsUnknownVariableAndBadExponent) {
  EXPECT_THROW(parse_monomial("x9", kP5), ParseError);
  EXPECT_THROW(parse_monomial("x1^", kP5), ParseError);
  EXPECT_THROW(parse_monomial("", kP5), ParseError);
}

TEST(Alphabet, RejectsDuplicates) {
  EXPECT_THROW(Alphabet(std::vector<std::string>{"a", "a"}), std::invalid_argument);
}

// Properties over random monomials.

TEST(MonomialProperties, MutualDivisionMeansEqual) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 5000; ++t) {
    const auto a = oracle::random_monomial(4, 2, rng);
    const auto b = oracle::random_monomial(4, 2, rng);
    if (divides(a, b) && divides(b, a)) {
      EXPECT_EQ(a, b);
    }
    EXPECT_EQ(divides(a, b), oracle::le(oracle::exps(a), oracle::exps(b)));
  }
}

TEST(MonomialProperties, ColonTimesGcdRestores) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 5000; ++t) {
    const auto a = oracle::random_monomial(6, 3, rng);
    const auto b = oracle::random_monomial(6, 3, rng);
    EXPECT_EQ(colon(a, b) * gcd(a, b), a);
    const auto ea = oracle::exps(a);
    const auto eb = oracle::exps(b);
    for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(static_cast<int>(gcd(a, b)[i]), std::min(ea[i], eb[i]));
  }
}

TEST(MonomialProperties, MinimalizeIsIdempotentAndAntichain) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    std::vector<Monomial> xs;
    const int count = 1 + t % 20;
    for (int k = 0; k < count; ++k) xs.push_back(oracle::random_monomial(4, 2, rng));
    const auto once = minimalize(xs);
    EXPECT_EQ(minimalize(once), once);
    for (const auto& a : once) {
      for (const auto& b : once) {
        if (!(a == b)) {
          EXPECT_FALSE(divides(a, b));
        }
      }
    }
    // Every input is a multiple of something kept.
    for (const auto& x : xs) {
      EXPECT_TRUE(std::any_of(once.begin(), once.end(), [&](const Monomial& m) { return divides(m, x); }));
    }
    std::vector<oracle::Exps> ex;
    for (const auto& x : xs) ex.push_back(oracle::exps(x));
    std::sort(ex.begin(), ex.end());
    ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
    EXPECT_EQ(once.size(), oracle::minimal_elements(ex).size());
  }
}

TEST(MonomialProperties, SquarefreeDivisorOfSquareDividesBase) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5000; ++t) {
    const auto a = oracle::random_monomial(8, 1, rng);
    const auto b = oracle::random_monomial(8, 1, rng);
    if (divides(b, a * a)) {
      EXPECT_TRUE(divides(b, a));
    }
  }
}

TEST(MonomialProperties, RenderParseRoundTrip) {
  std::mt19937_64 rng(5);
  const Alphabet al = Alphabet::indexed(12);
  for (int t = 0; t < 2000; ++t) {
    const auto m = oracle::random_monomial(12, 3, rng);
    EXPECT_EQ(parse_monomial(render(m, al), al), m);
    EXPECT_EQ(parse_monomial(render(m, al, RenderStyle::Starred), al), m);
  }
}
