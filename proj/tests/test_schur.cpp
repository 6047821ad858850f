#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "linper/schur.hpp"
#include "oracles.hpp"

using namespace linper;

namespace {

SchurDecomposition single(Partition p) { return {{std::move(p), 1}}; }

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Partition> support(const SchurDecomposition& dec) {
  std::vector<Partition> out;
  for (const auto& t : dec) out.push_back(t.lambda);
  return sorted(out);
}

}  // namespace

TEST(SchurPoly, DefiningRepresentation) {
  const auto s = schur_poly({1}, 2);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coefficient({1, 0}), 1);
  EXPECT_EQ(s.coefficient({0, 1}), 1);
}

TEST(SchurPoly, Determinant) {
  const auto s = schur_poly({1, 1}, 2);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coefficient({1, 1}), 1);
}

TEST(SchurPoly, TwoTableaux) {
  const auto s = schur_poly({2, 1}, 2);
  ASSERT_EQ(s.terms().size(), 1u);
  EXPECT_EQ(s.coefficient({2, 1}), 1);
  EXPECT_EQ(s.coefficient({1, 2}), 1);
  EXPECT_EQ(s.eval_at_ones(), 2);
}

TEST(SchurPoly, TooManyPartsThrows) { EXPECT_THROW(schur_poly({1, 1, 1}, 2), std::invalid_argument); }

TEST(SchurPoly, KostkaNumbers) {
  const auto s = schur_poly({2, 1}, 3);
  EXPECT_EQ(s.coefficient({2, 1, 0}), 1);
  EXPECT_EQ(s.coefficient({1, 1, 1}), 2);
  const auto t = schur_poly({2, 2}, 4);
  EXPECT_EQ(t.coefficient({1, 1, 1, 1}), 2);
  EXPECT_EQ(t.coefficient({2, 1, 1, 0}), 1);
}

TEST(SchurPoly, WeylDimensionAtOnes) {
  for (int N = 1; N <= 5; ++N)
    for (int k = 0; k <= 6; ++k)
      for (const auto& lambda : partitions_of(k, static_cast<std::size_t>(N)))
        EXPECT_EQ(schur_poly(lambda, N).eval_at_ones(), weyl_dimension(lambda, N));
  EXPECT_EQ(weyl_dimension({2, 1}, 3), 8);
  EXPECT_EQ(weyl_dimension({1, 1}, 4), 6);
}

TEST(SchurPoly, MatchesBialternantOracle) {
  std::mt19937_64 rng(2024);
  for (int N = 1; N <= 5; ++N)
    for (int k = 0; k <= 6; ++k)
      for (const auto& lambda : partitions_of(k, static_cast<std::size_t>(N))) {
        const auto x = oracle::distinct_points(static_cast<std::size_t>(N), rng);
        EXPECT_EQ(schur_poly(lambda, N).eval_mod(x, oracle::kPrime), oracle::schur_bialternant(lambda, x))
            << format_partition(lambda) << " N=" << N;
      }
}

TEST(Characters, WedgeSquareIsSchur11) {
  EXPECT_EQ(decompose_schur(wedge2_sym_char(1, 4)), single({1, 1}));
}

TEST(Characters, TwoVariablesGivePowersOfDeterminant) {
  for (int d = 0; d <= 5; ++d) {
    const auto p = wedge2_sym_char(d, 2);
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.coefficient({d, d}), 1);
    EXPECT_EQ(decompose_schur(p), single(Partition{d, d}));
  }
}

TEST(Characters, SymSquareOfWedgeSquare) {
  EXPECT_EQ(support(decompose_schur(wedge2_sym_char(2, 4))), sorted({{2, 2}, {1, 1, 1, 1}}));
}

TEST(Characters, SymCharIsSumOfMonomials) {
  const auto h = sym_char(3, 3);
  EXPECT_EQ(h.terms().size(), 3u);
  EXPECT_EQ(h.eval_at_ones(), 10);
  EXPECT_EQ(decompose_schur(h), single({3}));
}

TEST(Decompose, IdentityOnSchurPolynomials) {
  for (int k = 0; k <= 5; ++k)
    for (const auto& lambda : partitions_of(k, 4)) EXPECT_EQ(decompose_schur(schur_poly(lambda, 4)), single(lambda));
}

TEST(Decompose, TensorSquareOfDefining) {
  const auto s = schur_poly({1}, 2);
  EXPECT_EQ(decompose_schur(s * s), (SchurDecomposition{{{2}, 1}, {{1, 1}, 1}}));
}

TEST(Decompose, NegativeCoefficientThrows) {
  SymPoly p = schur_poly({1, 1}, 2);
  p -= schur_poly({2}, 2);
  EXPECT_THROW(decompose_schur(p), std::domain_error);
}

TEST(Decompose, JsonLayout) {
  const auto s = schur_poly({1}, 2);
  EXPECT_EQ(decomposition_to_json(decompose_schur(s * s)), R"([{"lambda":[2],"mult":1},{"lambda":[1,1],"mult":1}])");
}

TEST(Pieri, Examples) {
  EXPECT_EQ(sorted(pieri({1}, 1, 2)), sorted({{2}, {1, 1}}));
  EXPECT_EQ(sorted(pieri({1, 1}, 2, 4)), sorted({{3, 1}, {2, 1, 1}}));
  EXPECT_EQ(sorted(pieri({1, 1}, 1, 2)), sorted({{2, 1}}));
}

TEST(SchurIndex, Examples) {
  EXPECT_EQ(sorted(schur_index(1, 1, 2)), sorted({{2, 1}}));
  EXPECT_EQ(sorted(schur_index(2, 2, 2)), sorted({{2, 2}, {1, 1, 1, 1}}));
  EXPECT_EQ(sorted(schur_index(2, 1, 3)), sorted({{3, 1}, {2, 1, 1}}));
  EXPECT_EQ(sorted(schur_index(2, 1, 3)), sorted(pieri({1, 1}, 2, 4)));
  EXPECT_THROW(schur_index(1, 2, 1), std::invalid_argument);
}

TEST(MultiplicityFree, Examples) {
  EXPECT_TRUE(verify_multiplicity_free(1, 1, 1));
  EXPECT_EQ(schur_index(1, 1, 1), std::vector<Partition>{Partition({1, 1})});
  EXPECT_TRUE(verify_multiplicity_free(2, 2, 2));
  EXPECT_TRUE(verify_multiplicity_free(2, 1, 3));
}

TEST(FMap, Examples) {
  EXPECT_EQ(f_map({2, 1}, 1, 1, 2), (Partition{1, 1}));
  EXPECT_EQ(f_map({2, 2}, 2, 2, 2), (Partition{2, 2}));
  EXPECT_EQ(f_map({2, 1, 1}, 2, 1, 3), (Partition{1, 1}));
  EXPECT_THROW(f_map({3}, 1, 1, 2), std::invalid_argument);
}

TEST(FMap, FibersAreHorizontalStrips) {
  for (int n = 1; n <= 3; ++n)
    for (int dp = 0; dp <= 4; ++dp)
      for (int d = 0; d <= dp; ++d) EXPECT_TRUE(verify_f_map_fibers(n, d, dp)) << n << ' ' << d << ' ' << dp;
}

TEST(AntidominantIndex, Examples) {
  EXPECT_EQ(antidominant_index(1, 1, 2), std::vector<Coweight>{Coweight({1, 2})});
  for (int dp = 0; dp <= 4; ++dp) EXPECT_EQ(antidominant_index(1, 0, dp), std::vector<Coweight>{Coweight({0, dp})});
  EXPECT_EQ(antidominant_index(2, 2, 2), (std::vector<Coweight>{{0, 0, 2, 2}, {1, 1, 1, 1}}));
  EXPECT_TRUE(verify_index_reversal(1, 1, 2));
  EXPECT_TRUE(verify_index_reversal(2, 2, 2));
  EXPECT_THROW(antidominant_index(1, 3, 2), std::invalid_argument);
}

TEST(SchurProperties, MultiplicityFreeAtDeskScale) {
  for (int n = 1; n <= 3; ++n)
    for (int dp = 0; dp <= 4; ++dp)
      for (int d = 0; d <= dp; ++d) EXPECT_TRUE(verify_multiplicity_free(n, d, dp)) << n << ' ' << d << ' ' << dp;
}

TEST(SchurProperties, IndexMatchesPointEvaluationOracle) {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 3; ++n)
    for (int dp = 0; dp <= 4; ++dp)
      for (int d = 0; d <= dp; ++d)
        for (int trial = 0; trial < 3; ++trial) {
          const auto x = oracle::distinct_points(static_cast<std::size_t>(2 * n), rng);
          std::uint64_t sum = 0;
          for (const auto& lambda : schur_index(n, d, dp)) sum = (sum + oracle::schur_bialternant(lambda, x)) % oracle::kPrime;
          EXPECT_EQ(sum, oracle::wedge2_sym_times_sym(d, dp - d, x)) << n << ' ' << d << ' ' << dp;
        }
}

TEST(SchurProperties, PieriMatchesCharacterProduct) {
  for (int N = 1; N <= 5; ++N)
    for (int size = 0; size <= 5; ++size)
      for (const auto& lambda : partitions_of(size, static_cast<std::size_t>(N)))
        for (int k = 0; k <= 3; ++k) {
          const auto dec = decompose_schur(schur_poly(lambda, N) * sym_char(k, N));
          for (const auto& t : dec) EXPECT_EQ(t.mult, 1);
          EXPECT_EQ(support(dec), sorted(pieri(lambda, k, N)));
        }
}

TEST(SchurProperties, DecompositionRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> mult(1, 4), count(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::map<Partition, std::int64_t> chosen;
    for (int i = count(rng); i > 0; --i) chosen[oracle::random_partition(rng, 5, 3)] += mult(rng);
    SchurDecomposition dec;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) dec.push_back({it->first, it->second});
    EXPECT_EQ(decompose_schur(recompose(dec, 3)), dec);
  }
}

TEST(SchurProperties, DimensionAtOnes) {
  for (int n = 1; n <= 3; ++n)
    for (int dp = 0; dp <= 4; ++dp)
      for (int d = 0; d <= dp; ++d) {
        const auto expected = multiplicity_free_dimension(n, d, dp);
        EXPECT_EQ((wedge2_sym_char(d, 2 * n) * sym_char(dp - d, 2 * n)).eval_at_ones(), expected);
        std::int64_t sum = 0;
        for (const auto& lambda : schur_index(n, d, dp)) sum += weyl_dimension(lambda, 2 * n);
        EXPECT_EQ(sum, expected);
      }
  EXPECT_EQ(multiplicity_free_dimension(1, 2, 2), 1);
  EXPECT_EQ(multiplicity_free_dimension(2, 1, 3), 60);
}

TEST(SchurProperties, IndexReversalBijection) {
  for (int n = 1; n <= 3; ++n)
    for (int dp = 0; dp <= 4; ++dp)
      for (int d = 0; d <= dp; ++d) {
        EXPECT_TRUE(verify_index_reversal(n, d, dp));
        EXPECT_EQ(antidominant_index(n, d, dp).size(), schur_index(n, d, dp).size());
      }
}
