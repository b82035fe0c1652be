#include <gtest/gtest.h>

#include <cstdlib>

#include "noncross/lattice.hpp"
#include "noncross/random.hpp"
#include "oracles.hpp"

namespace noncross {
namespace {

bool is_smith_form(const IntMatrix& s) {
  const std::size_t rows = s.size(), cols = s.empty() ? 0 : s[0].size();
  std::int64_t prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (i != j && s[i][j] != 0) return false;
    }
    if (i >= cols) continue;
    const std::int64_t d = s[i][i];
    if (d < 0) return false;
    if (d == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || d % prev != 0) return false;
    prev = d;
  }
  return true;
}

void check_contract(const IntMatrix& m) {
  const auto f = smith_normal_form(m);
  ASSERT_EQ(matmul(matmul(f.U, m), f.V), f.S);
  ASSERT_EQ(abs(oracle::determinant(f.U)), 1);
  ASSERT_EQ(abs(oracle::determinant(f.V)), 1);
  ASSERT_TRUE(is_smith_form(f.S));
}

TEST(Smith, Examples) {
  const IntMatrix d{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 3}};
  EXPECT_EQ(smith_normal_form(d).diagonal(), (std::vector<std::int64_t>{1, 1, 6, 6}));
  EXPECT_EQ(oracle::invariant_factors_from_cyclic({2, 2, 3, 3}), (std::vector<std::int64_t>{6, 6}));
  check_contract(d);

  const IntMatrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(smith_normal_form(id).diagonal(), (std::vector<std::int64_t>{1, 1, 1}));

  const IntMatrix m{{2, 4}, {6, 8}};
  const auto f = smith_normal_form(m);
  EXPECT_EQ(f.diagonal(), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(abs(oracle::determinant(m)), 8);
  check_contract(m);
}

TEST(Smith, RectangularAndSingular) {
  check_contract({{1, 2, 3}, {4, 5, 6}});
  check_contract({{1, 2}, {2, 4}, {3, 6}});
  check_contract({{0, 0}, {0, 0}});
  EXPECT_EQ(smith_normal_form({{1, 2}, {2, 4}}).diagonal(), (std::vector<std::int64_t>{1}));
}

TEST(Smith, RandomContractAndOracles) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, IntVector(cols));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 21) - 10;
    check_contract(m);
    if (rows == cols) {
      const auto d = smith_normal_form(m).diagonal();
      mpz_class product = d.size() == rows ? 1 : 0;
      for (auto x : d) product *= static_cast<long>(x);
      ASSERT_EQ(product, abs(oracle::determinant(m)));
    }
  }
  for (int t = 0; t < 200; ++t) {
    std::vector<std::int64_t> orders;
    for (std::size_t k = 0, len = 1 + rng() % 4; k < len; ++k)
      orders.push_back(1 + static_cast<std::int64_t>(rng() % 36));
    IntMatrix diag(orders.size(), IntVector(orders.size(), 0));
    for (std::size_t k = 0; k < orders.size(); ++k) diag[k][k] = orders[k];
    auto expected = oracle::invariant_factors_from_cyclic(orders);
    auto got = smith_normal_form(diag).diagonal();
    std::erase(got, 1);
    ASSERT_EQ(got, expected);
  }
}

TEST(QuotientType, Examples) {
  const auto t1 = quotient_type(2, IntegerLattice{2, {{2, 0}, {0, 2}}});
  EXPECT_EQ(t1.invariant_factors, (std::vector<std::int64_t>{2, 2}));
  EXPECT_EQ(t1.free_rank, 0);

  const AlgebraConfig c23({2, 3});
  const auto t2 = quotient_type(4, center_value_lattice(c23));
  EXPECT_EQ(t2.invariant_factors, (std::vector<std::int64_t>{1, 1, 6, 6}));
  EXPECT_EQ(t2.order(), 36);
  EXPECT_EQ(rank(t2), 2);

  const auto t3 = quotient_type(2, IntegerLattice{2, {{1, 0}}});
  EXPECT_EQ(t3.invariant_factors, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(t3.free_rank, 1);
  EXPECT_FALSE(t3.order().has_value());
  EXPECT_EQ(t3.to_string(), "Z_1 + Z^1");
}

TEST(QuotientType, SingleBlockIsRankTwo) {
  for (int n = 2; n <= 12; ++n) {
    const auto t = quotient_type(2, center_value_lattice(AlgebraConfig({n})));
    EXPECT_EQ(t.invariant_factors, (std::vector<std::int64_t>{n, n}));
    EXPECT_EQ(rank(t), 2);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(AbelianGroupType{{2, 2, 2}, 0}), 3);
  EXPECT_EQ(rank(AbelianGroupType{{5, 5}, 0}), 2);
  EXPECT_EQ(rank(AbelianGroupType{}), 0);
  EXPECT_EQ(rank(AbelianGroupType{{1, 1}, 0}), 0);
  EXPECT_EQ(rank(AbelianGroupType{{1, 3}, 2}), 3);
  EXPECT_EQ(AbelianGroupType{}.to_string(), "0");
}

TEST(QuotientImage, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_EQ(quotient_image(c2, {1, 1}), (IntVector{1, 1}));
  EXPECT_EQ(quotient_image(c2, {2, 4}), (IntVector{0, 0}));
  EXPECT_EQ(quotient_image(c2, {-1, 3}), (IntVector{1, 1}));
  EXPECT_EQ(quotient_image(AlgebraConfig({2, 3}), {1, 2, 4, 5}), (IntVector{1, 0, 1, 2}));
}

TEST(Pairing, Examples) {
  const AlgebraConfig c2({2});
  const auto e = commutator_pairing(c2, {1, 0}, {0, 1});
  EXPECT_EQ(e.to_cyc(), CycNum::from_rational(2, -1));
  EXPECT_TRUE(commutator_pairing(c2, {3, 1}, {3, 1}).is_trivial());
  EXPECT_TRUE(commutator_pairing(AlgebraConfig({2, 3}), {1, 0, 0, 0}, {0, 0, 0, 1}).is_trivial());
}

TEST(Pairing, MatchesElementCommutator) {
  Rng rng(32);
  for (const auto& config : std::vector<AlgebraConfig>{AlgebraConfig({3}), AlgebraConfig({2, 3}),
                                                       AlgebraConfig({4, 2})}) {
    for (int t = 0; t < 200; ++t) {
      const auto a = random_exponent(rng, config.dim(), -3, 3);
      const auto b = random_exponent(rng, config.dim(), -3, 3);
      const auto xa = TwistedElement::monomial(config, a);
      const auto xb = TwistedElement::monomial(config, b);
      const auto eps = commutator_pairing(config, a, b);
      ASSERT_EQ(xa * xb, (xb * xa).scaled(eps.to_cyc()));
    }
  }
}

TEST(Central, Examples) {
  const AlgebraConfig c2({2});
  EXPECT_TRUE(is_central_monomial(c2, {2, 0}));
  EXPECT_FALSE(is_central_monomial(c2, {1, 0}));
  for (const auto& blocks : std::vector<std::vector<int>>{{2}, {3, 2}, {2, 2, 2}}) {
    const AlgebraConfig c(blocks);
    EXPECT_TRUE(is_central_monomial(c, ExponentVector(static_cast<std::size_t>(c.dim()))));
  }
}

TEST(Central, CriterionExhaustive) {
  const AlgebraConfig c({2, 3});
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c3 = -6; c3 <= 6; ++c3)
        for (int d = -6; d <= 6; ++d) {
          const ExponentVector alpha{a, b, c3, d};
          const bool central = is_central_monomial(c, alpha);
          ASSERT_EQ(central, in_center_lattice(c, alpha));
          const auto img = quotient_image(c, alpha);
          ASSERT_EQ(central, std::all_of(img.begin(), img.end(), [](auto x) { return x == 0; }));
        }
}

}  // namespace
}  // namespace noncross
