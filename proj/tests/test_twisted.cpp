#include <gtest/gtest.h>

#include "noncross/error.hpp"
#include "noncross/expr.hpp"
#include "noncross/random.hpp"
#include "noncross/twisted.hpp"
#include "oracles.hpp"

namespace noncross {
namespace {

TwistedElement el(const AlgebraConfig& c, const char* text) { return parse_element(text, c); }

TEST(Cocycle, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(cocycle(c2, {0, 1}, {1, 0}), CycNum::from_rational(2, -1));
  EXPECT_EQ(cocycle(c2, {1, 0}, {0, 1}), CycNum::one(2));
  const AlgebraConfig c3({3});
  EXPECT_EQ(cocycle(c3, {0, 2}, {1, 0}), CycNum::zeta_power(3, -2));
  EXPECT_THROW(cocycle(c3, {0, 2, 1}, {1, 0}), Error);
}

TEST(Cocycle, ExamplesMatchRewriting) {
  const AlgebraConfig c2({2});
  // y x -> -x y
  const auto yx = reduce_word(c2, {{2, 1}, {1, 1}});
  EXPECT_EQ(yx, TwistedElement::monomial(c2, {1, 1}, CycNum::from_rational(2, -1)));
  const AlgebraConfig c3({3});
  const auto yyx = reduce_word(c3, {{2, 1}, {2, 1}, {1, 1}});
  EXPECT_EQ(yyx, TwistedElement::monomial(c3, {1, 2}, cocycle(c3, {0, 2}, {1, 0})));
}

TEST(ReduceWord, NormalOrderAndDistinctBlocks) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(reduce_word(c2, {{1, 1}, {2, 1}}), TwistedElement::monomial(c2, {1, 1}));
  const AlgebraConfig c23({2, 3});
  // x_2 y_1 = y_1 x_2
  EXPECT_EQ(reduce_word(c23, {{3, 1}, {2, 1}}), TwistedElement::monomial(c23, {0, 1, 1, 0}));
  EXPECT_EQ(reduce_word(c23, {}), TwistedElement::one(c23));
  // x x^{-1} cancels
  EXPECT_EQ(reduce_word(c23, {{1, 1}, {2, 1}, {1, -1}}),
            TwistedElement::monomial(c23, {0, 1, 0, 0}, CycNum::from_rational(6, -1)));
  EXPECT_THROW(reduce_word(c23, {{5, 1}}), Error);
}

TEST(Mul, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(mul(el(c2, "x1*y1"), el(c2, "x1*y1")),
            TwistedElement::monomial(c2, {2, 2}, CycNum::from_rational(2, -1)));
  const auto f = el(c2, "3*x1 - 1/2*y1^2 + x1^-1");
  EXPECT_EQ(mul(f, TwistedElement::one(c2)), f);
  EXPECT_EQ(mul(TwistedElement::one(c2), f), f);

  const auto prod = mul(el(c2, "x1 + y1"), el(c2, "x1 - y1"));
  EXPECT_EQ(prod, oracle::rewrite_mul(el(c2, "x1 + y1"), el(c2, "x1 - y1")));
  TwistedElement expected(c2);
  expected.add_term({2, 0}, CycNum::one(2));
  expected.add_term({0, 2}, CycNum::from_rational(2, -1));
  expected.add_term({1, 1}, CycNum::from_rational(2, -2));
  EXPECT_EQ(prod, expected);
}

TEST(Mul, ConfigMismatchThrows) {
  EXPECT_THROW(mul(TwistedElement::one(AlgebraConfig({2})), TwistedElement::one(AlgebraConfig({3}))),
               Error);
}

TEST(AddNeg, Basics) {
  const AlgebraConfig c({2, 3});
  const auto f = el(c, "x1 + z*y2^2 - 4");
  EXPECT_EQ(f + TwistedElement::zero(c), f);
  EXPECT_TRUE((f + (-f)).is_zero());
  EXPECT_EQ(scalar_mul(CycNum::from_rational(6, 2), el(c, "x1 + y1")), el(c, "2*x1 + 2*y1"));
  EXPECT_TRUE(scalar_mul(CycNum::zero(6), f).is_zero());
}

TEST(Pow, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(pow(el(c2, "x1"), 3), TwistedElement::monomial(c2, {3, 0}));
  EXPECT_EQ(pow(el(c2, "x1*y1"), 2), el(c2, "-x1^2*y1^2"));
  EXPECT_EQ(pow(el(c2, "1 + x1 + y1"), 0), TwistedElement::one(c2));
}

TEST(Truncated, ModesAndMeet) {
  const AlgebraConfig c2({2});
  const auto a = el(c2, "1 + x1 + x1^3").truncated(2);
  EXPECT_EQ(a.precision(), 2);
  EXPECT_EQ(a.size(), 2u);
  const auto b = el(c2, "1 + y1").truncated(5);
  const auto ab = mul(a, b);
  EXPECT_EQ(ab.precision(), 2);
  EXPECT_EQ(ab, el(c2, "1 + x1 + y1 + x1*y1").truncated(2));
  // Exact operand read at the truncated precision.
  const auto mixed = el(c2, "x1^2 + y1^4") + a;
  EXPECT_EQ(mixed.precision(), 2);
  EXPECT_EQ(mixed, el(c2, "1 + x1 + x1^2").truncated(2));
  // Negative exponents cannot be reinterpreted.
  try {
    (void)(el(c2, "x1^-1") + a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotConeRegular);
  }
  EXPECT_THROW(el(c2, "x1^-1").truncated(3), Error);
  EXPECT_THROW(a.truncated(3), Error);
}

TEST(Twisted, OracleAgreementRandomMonomials) {
  Rng rng(11);
  for (const auto& blocks : std::vector<std::vector<int>>{{2}, {3}, {2, 3}, {4, 2}, {3, 3}}) {
    const AlgebraConfig config(blocks);
    for (int t = 0; t < 300; ++t) {
      const auto a = random_exponent(rng, config.dim(), -3, 3);
      const auto b = random_exponent(rng, config.dim(), -3, 3);
      GeneratorWord w = oracle::word_of(a);
      const auto wb = oracle::word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      ASSERT_EQ(TwistedElement::monomial(config, a) * TwistedElement::monomial(config, b),
                reduce_word(config, w))
          << a.to_string() << " " << b.to_string();
    }
  }
}

TEST(Twisted, CocycleConditionAndAssociativity) {
  Rng rng(12);
  for (const auto& blocks : std::vector<std::vector<int>>{{2}, {3}, {2, 3}, {4, 2}}) {
    const AlgebraConfig config(blocks);
    for (int t = 0; t < 250; ++t) {
      const auto a = random_exponent(rng, config.dim(), -4, 4);
      const auto b = random_exponent(rng, config.dim(), -4, 4);
      const auto c = random_exponent(rng, config.dim(), -4, 4);
      ASSERT_EQ(cocycle(config, a, b) * cocycle(config, a + b, c),
                cocycle(config, b, c) * cocycle(config, a, b + c));
    }
    for (int t = 0; t < 30; ++t) {
      const auto f = random_exact(rng, config, 3, -2, 2);
      const auto g = random_exact(rng, config, 3, -2, 2);
      const auto h = random_exact(rng, config, 3, -2, 2);
      ASSERT_EQ(mul(mul(f, g), h), mul(f, mul(g, h)));
      ASSERT_EQ(mul(f, g), oracle::rewrite_mul(f, g));
    }
  }
}

TEST(Twisted, DefiningRelations) {
  for (const auto& blocks :
       std::vector<std::vector<int>>{{2}, {2, 2}, {2, 3}, {3, 3}, {4, 2}}) {
    const AlgebraConfig config(blocks);
    for (int i = 1; i <= config.r(); ++i) {
      const auto xi = TwistedElement::generator(config, false, i);
      const auto yi = TwistedElement::generator(config, true, i);
      EXPECT_TRUE((xi * yi - (yi * xi).scaled(primitive_root(config, i))).is_zero());
      for (int j = 1; j <= config.r(); ++j) {
        const auto xj = TwistedElement::generator(config, false, j);
        const auto yj = TwistedElement::generator(config, true, j);
        EXPECT_TRUE((xi * xj - xj * xi).is_zero());
        EXPECT_TRUE((yi * yj - yj * yi).is_zero());
        if (i != j) EXPECT_TRUE((xi * yj - yj * xi).is_zero());
      }
    }
  }
}

TEST(Twisted, NoZeroDivisors) {
  Rng rng(13);
  const AlgebraConfig config({2, 3});
  for (int t = 0; t < 200; ++t) {
    const auto f = random_exact(rng, config, 4, -2, 2);
    const auto g = random_exact(rng, config, 4, -2, 2);
    ASSERT_FALSE(mul(f, g).is_zero());
  }
}

TEST(Twisted, MonomialInverse) {
  const AlgebraConfig c({3, 2});
  const ExponentVector alpha{2, -1, 1, 3};
  const CycNum a = CycNum::from_coeffs(6, std::vector<Rational>{2, 1});
  const auto u = TwistedElement::monomial(c, alpha, a);
  const auto ui = monomial_inverse(c, alpha, a);
  EXPECT_EQ(u * ui, TwistedElement::one(c));
  EXPECT_EQ(ui * u, TwistedElement::one(c));
}

TEST(RtlLex, Examples) {
  EXPECT_TRUE(rtl_lex_compare({5, 0}, {0, 1}) < 0);
  EXPECT_TRUE(rtl_lex_compare({1, 1}, {1, 1}) == 0);
  EXPECT_TRUE(rtl_lex_compare({0, 1, 0, 0}, {0, 0, 1, 0}) < 0);
  EXPECT_THROW(rtl_lex_compare({1}, {1, 2}), Error);
}

TEST(RtlLex, MatchesPositionalKeyExhaustively) {
  std::vector<ExponentVector> all;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) all.push_back(ExponentVector{a, b, c});
  for (const auto& u : all) {
    for (const auto& v : all) {
      ASSERT_TRUE(rtl_lex_compare(u, v) == (oracle::rtl_key(u, 2) <=> oracle::rtl_key(v, 2)));
    }
  }
}

}  // namespace
}  // namespace noncross
