#include <gtest/gtest.h>

#include "noncross/error.hpp"
#include "noncross/obstruct.hpp"
#include "oracles.hpp"

namespace noncross {
namespace {

using Ints = std::vector<std::int64_t>;

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(8), (Ints{2, 2, 2}));
  EXPECT_EQ(factorize(12), (Ints{2, 2, 3}));
  EXPECT_EQ(factorize(360), (Ints{2, 2, 2, 3, 3, 5}));
  EXPECT_EQ(factorize(97), (Ints{97}));
  EXPECT_THROW(factorize(1), Error);
}

TEST(Factorize, ProductAndPrimality) {
  for (std::int64_t n = 2; n <= 2000; ++n) {
    std::int64_t product = 1;
    for (auto p : factorize(n)) {
      product *= p;
      for (std::int64_t d = 2; d < p; ++d) ASSERT_NE(p % d, 0) << n;
    }
    ASSERT_EQ(product, n);
  }
}

TEST(ForcedGroup, Examples) {
  const auto g8 = forced_group_type({2, 2, 2});
  EXPECT_EQ(g8.invariant_factors, (Ints{2, 2, 2}));
  EXPECT_EQ(rank(g8), 3);
  const auto g6 = forced_group_type({2, 3});
  EXPECT_EQ(g6.order(), 6);
  EXPECT_EQ(rank(g6), 1);
  EXPECT_EQ(rank(forced_group_type({7})), 1);
  EXPECT_EQ(forced_group_type({2, 2, 3}).invariant_factors, (Ints{1, 2, 6}));
}

TEST(WitnessConfigs, Examples) {
  auto [d1, d2] = witness_configs(8);
  EXPECT_EQ(d1, AlgebraConfig({2, 2, 2}, 8));
  EXPECT_EQ(d2, AlgebraConfig({8}, 8));
  EXPECT_EQ(d1.m(), 8);
  std::tie(d1, d2) = witness_configs(6);
  EXPECT_EQ(d1, AlgebraConfig({2, 3}, 6));
  EXPECT_EQ(d2, AlgebraConfig({6}, 6));
  std::tie(d1, d2) = witness_configs(7);
  EXPECT_EQ(d1, d2);
}

TEST(Obstruction, Examples) {
  auto v = obstruction(8, 0);
  EXPECT_EQ(v.verdict, Verdict::kNoncrossed);
  EXPECT_EQ(v.certificate.cube_prime, 2);
  EXPECT_EQ(v.certificate.forced_rank, 3);
  EXPECT_EQ(v.certificate.second_witness_bound, 2);

  v = obstruction(27, 0);
  EXPECT_EQ(v.verdict, Verdict::kNoncrossed);
  EXPECT_EQ(v.certificate.forced_group.invariant_factors, (Ints{3, 3, 3}));

  EXPECT_EQ(obstruction(12, 0).verdict, Verdict::kInconclusive);
  EXPECT_EQ(obstruction(30, 0).verdict, Verdict::kInconclusive);
  EXPECT_EQ(obstruction(8, 2).verdict, Verdict::kInapplicable);
  EXPECT_EQ(obstruction(27, 2).verdict, Verdict::kNoncrossed);
  EXPECT_EQ(verdict_name(Verdict::kNoncrossed), "NONCROSSED");
}

TEST(Obstruction, BadInputs) {
  EXPECT_THROW(obstruction(1, 0), Error);
  EXPECT_THROW(obstruction(8, 4), Error);
}

TEST(Obstruction, DecisionBoundary) {
  for (std::int64_t n = 2; n <= 1000; ++n) {
    ASSERT_EQ(obstruction(n, 0).verdict == Verdict::kNoncrossed, oracle::has_prime_cube_divisor(n))
        << n;
  }
}

}  // namespace
}  // namespace noncross
