#include <gtest/gtest.h>

#include <stdexcept>

#include "linper/finite_field.hpp"

using namespace linper;

TEST(FiniteField, OnlySmallPrimes) {
  EXPECT_NO_THROW(require_small_prime(2));
  EXPECT_NO_THROW(require_small_prime(3));
  EXPECT_THROW(require_small_prime(5), std::invalid_argument);
  EXPECT_THROW(all_subspaces(2, 4), std::invalid_argument);
}

TEST(FiniteField, Inverses) {
  EXPECT_EQ(inv_mod_p(2, 3), 2);
  EXPECT_EQ(inv_mod_p(1, 2), 1);
  EXPECT_EQ(mod_p(-1, 3), 2);
  EXPECT_THROW(inv_mod_p(0, 3), std::domain_error);
}

TEST(FiniteField, RankAndNullspace) {
  const FpMatrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 2}};
  EXPECT_EQ(fp_rank(m, 3), 2);
  EXPECT_EQ(fp_rank(m, 2), 3);
  const auto kernel = fp_nullspace(m, 3);
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(fp_apply(m, kernel[0], 3), (FpVec{0, 0, 0}));
}

TEST(FiniteField, SubspaceCountsAreGaussianBinomials) {
  EXPECT_EQ(all_subspaces(3, 2).size(), 1u + 7 + 7 + 1);
  EXPECT_EQ(all_subspaces(4, 2).size(), 1u + 15 + 35 + 15 + 1);
  EXPECT_EQ(all_subspaces(3, 3).size(), 1u + 13 + 13 + 1);
  EXPECT_EQ(all_subspaces(0, 2).size(), 1u);
}

TEST(FiniteField, CanonicalForm) {
  const auto a = Subspace::span(3, 3, {{1, 2, 0}, {0, 1, 1}});
  const auto b = Subspace::span(3, 3, {{1, 0, 1}, {2, 1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.contains(FpVec{1, 0, 1}));
  EXPECT_FALSE(a.contains(FpVec{1, 0, 0}));
  EXPECT_TRUE(a.contains(Subspace::span(3, 3, {{2, 0, 2}})));
}

TEST(FiniteField, StabilityUnderNilpotent) {
  const FpMatrix shift{{0, 0}, {1, 0}};
  EXPECT_TRUE(Subspace::span(2, 2, {{0, 1}}).is_stable(shift));
  EXPECT_FALSE(Subspace::span(2, 2, {{1, 0}}).is_stable(shift));
  EXPECT_EQ(Subspace::span(2, 2, {{1, 0}}).image(shift), Subspace::span(2, 2, {{0, 1}}));
}

TEST(FiniteField, FlagCounts) {
  EXPECT_EQ(all_complete_flags(2, 2).size(), 3u);
  EXPECT_EQ(all_complete_flags(3, 2).size(), 21u);
  EXPECT_EQ(all_complete_flags(4, 2).size(), 315u);
  EXPECT_EQ(all_complete_flags(3, 3).size(), 52u);
  for (const auto& f : all_complete_flags(3, 2)) {
    ASSERT_EQ(f.size(), 2u);
    EXPECT_TRUE(f[1].contains(f[0]));
  }
}

TEST(FiniteField, AllVectors) {
  const auto v = fp_all_vectors(2, 3);
  ASSERT_EQ(v.size(), 9u);
  EXPECT_EQ(v.front(), (FpVec{0, 0}));
  EXPECT_EQ(v.back(), (FpVec{2, 2}));
}
