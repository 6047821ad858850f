#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "linper/levi.hpp"

using namespace linper;

namespace {

const BlockLevi kInterleaved4(4, {{1, 3}, {2, 4}});

std::vector<Coweight> box(int N, int lo, int hi) {
  std::vector<Coweight> out;
  std::vector<int> v(static_cast<std::size_t>(N), lo);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == hi) v[i++] = lo;
    if (i == v.size()) break;
    ++v[i];
  }
  return out;
}

Coweight act(const std::vector<int>& w, const Coweight& lambda) {
  std::vector<int> out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) out[static_cast<std::size_t>(w[i])] = lambda[i];
  return Coweight(out);
}

// Permutations of {0..N-1} preserving every block.
std::vector<std::vector<int>> weyl_group(const BlockLevi& L) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(L.rank()));
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i);
  do {
    bool ok = true;
    for (const auto& block : L.blocks())
      for (int a : block)
        if (std::find(block.begin(), block.end(), w[static_cast<std::size_t>(a - 1)] + 1) == block.end()) ok = false;
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Coweight> naive_J(const Coweight& lambda, const Coweight& nu, const BlockLevi& L) {
  const auto WM = weyl_group(L);
  std::vector<int> all(static_cast<std::size_t>(L.rank()));
  for (int i = 0; i < L.rank(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
  const auto W = weyl_group(BlockLevi(L.rank(), {all}));
  const auto [lo, hi] = std::minmax_element(nu.begin(), nu.end());
  std::vector<Coweight> out;
  for (const auto& mu : box(L.rank(), *lo, *hi)) {
    if (!is_M_dominant(mu, L)) continue;
    bool ok = true;
    for (const auto& w : WM) ok = ok && leq_M(act(w, lambda), mu, L);
    for (const auto& w : W) ok = ok && leq_G(act(w, mu), nu);
    if (ok) out.push_back(mu);
  }
  return out;
}

}  // namespace

TEST(BlockLevi, Validation) {
  EXPECT_THROW(BlockLevi(3, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(BlockLevi(2, {{1, 2}, {2}}), std::invalid_argument);
  EXPECT_THROW(BlockLevi(2, {{1}, {}}), std::invalid_argument);
  EXPECT_THROW(BlockLevi(0, {}), std::invalid_argument);
  EXPECT_THROW(BlockLevi::parse("[[1,x]]"), std::invalid_argument);
  EXPECT_THROW(BlockLevi::parse("{}"), std::invalid_argument);
}

TEST(BlockLevi, ParseAndSerialize) {
  const auto L = BlockLevi::parse("[[2,4],[3,1]]");
  EXPECT_EQ(L, kInterleaved4);
  EXPECT_EQ(L.to_json(), "[[1,3],[2,4]]");
  EXPECT_EQ(BlockLevi::interleaved(2), kInterleaved4);
  EXPECT_EQ(BlockLevi::torus(2).blocks().size(), 2u);
}

TEST(BlockLevi, RhoData) {
  const auto r = rho_data(kInterleaved4);
  EXPECT_EQ(r.two_rho, (Coweight{3, 1, -1, -3}));
  EXPECT_EQ(r.two_rho_M, (Coweight{1, 1, -1, -1}));
}

TEST(Antistandard, Examples) {
  EXPECT_TRUE(is_antistandard(kInterleaved4));
  EXPECT_FALSE(is_antistandard(BlockLevi(4, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_antistandard(BlockLevi::torus(2)));
}

TEST(Antistandard, InterleavedPairsToTwo) {
  for (int n = 1; n <= 4; ++n) {
    const auto L = BlockLevi::interleaved(n);
    EXPECT_TRUE(is_antistandard(L)) << n;
    const auto r = rho_data(L);
    for (const auto& block : L.blocks())
      for (std::size_t k = 0; k + 1 < block.size(); ++k) {
        const auto a = static_cast<std::size_t>(block[k] - 1), b = static_cast<std::size_t>(block[k + 1] - 1);
        EXPECT_EQ((r.two_rho[a] - r.two_rho_M[a]) - (r.two_rho[b] - r.two_rho_M[b]), 2);
      }
  }
}

TEST(Orders, Examples) {
  EXPECT_TRUE(leq_G({0, 0}, {1, -1}));
  EXPECT_FALSE(leq_G({1, -1}, {0, 0}));
  EXPECT_FALSE(leq_G({0, 0}, {1, 0}));
  EXPECT_EQ(dom_M({3, 0, 1, 2}, kInterleaved4), (Coweight{3, 2, 1, 0}));
  EXPECT_TRUE(leq_M({1, 0, -1, 0}, {1, 0, -1, 0}, kInterleaved4));
  EXPECT_EQ(w0({1, 2, 3}), (Coweight{3, 2, 1}));
  EXPECT_EQ(w0_M({1, 2, 3, 4}, kInterleaved4), (Coweight{3, 4, 1, 2}));
  EXPECT_THROW(leq_G({0}, {0, 0}), std::invalid_argument);
}

TEST(Orders, DominantIsOrbitMaximum) {
  std::mt19937_64 rng(7);
  for (const auto& L : all_block_levis(4)) {
    const auto WM = weyl_group(L);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> v(4);
      for (auto& x : v) x = std::uniform_int_distribution<int>(-3, 3)(rng);
      const Coweight lambda(v);
      const auto top = dom_M(lambda, L);
      EXPECT_TRUE(is_M_dominant(top, L));
      for (const auto& w : WM) EXPECT_TRUE(leq_M(act(w, lambda), top, L)) << L.to_json() << format_coweight(lambda);
    }
  }
}

TEST(JSet, Examples) {
  const auto T = BlockLevi::torus(2);
  EXPECT_EQ(J_set({0, 0}, {0, 0}, T), (std::vector<Coweight>{{0, 0}}));
  EXPECT_EQ(J_set({-1, 0}, {0, -1}, T), (std::vector<Coweight>{{-1, 0}}));
  EXPECT_TRUE(J_set({-1, 0}, {1, 0}, T).empty());
  EXPECT_THROW(J_set({0, 0}, {-1, 0}, T), std::invalid_argument);
}

TEST(JSet, MatchesQuantifiedDefinition) {
  for (int N = 1; N <= 3; ++N)
    for (const auto& L : all_block_levis(N))
      for (const auto& nu : box(N, -1, 1)) {
        if (!is_G_dominant(nu)) continue;
        for (const auto& lambda : box(N, -1, 1)) {
          auto fast = J_set(lambda, nu, L);
          auto slow = naive_J(lambda, nu, L);
          std::sort(fast.begin(), fast.end());
          std::sort(slow.begin(), slow.end());
          EXPECT_EQ(fast, slow) << L.to_json() << " " << format_coweight(lambda) << " " << format_coweight(nu);
        }
      }
}

TEST(JSet, MonotoneInNu) {
  const auto dominant = [] {
    std::vector<Coweight> out;
    for (const auto& nu : box(4, -2, 2))
      if (is_G_dominant(nu)) out.push_back(nu);
    return out;
  }();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, dominant.size() - 1);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 60; ++trial) {
    const auto& a = dominant[pick(rng)];
    const auto& b = dominant[pick(rng)];
    if (!leq_G(a, b)) continue;
    ++compared;
    std::vector<int> v(4);
    for (auto& x : v) x = std::uniform_int_distribution<int>(-2, 2)(rng);
    const Coweight lambda(v);
    const auto small = J_set(lambda, a, kInterleaved4);
    const auto large = J_set(lambda, b, kInterleaved4);
    const std::set<Coweight> big(large.begin(), large.end());
    for (const auto& mu : small) EXPECT_TRUE(big.count(mu)) << format_coweight(mu);
  }
  EXPECT_GT(compared, 10);
}

TEST(FValue, Examples) {
  EXPECT_EQ(f_val({0, 0}, BlockLevi::torus(2)), 0);
  EXPECT_EQ(f_val({-1, 0}, BlockLevi::torus(2)), -1);
  EXPECT_EQ(f_val({1, 0}, BlockLevi(2, {{1, 2}})), 0);
  EXPECT_THROW(f_val({0, 1}, BlockLevi(2, {{1, 2}})), std::invalid_argument);
}

TEST(FValue, NeverPositive) {
  for (int N = 1; N <= 4; ++N)
    for (const auto& L : all_block_levis(N))
      for (const auto& mu : box(N, -2, 2))
        if (is_M_dominant(mu, L)) EXPECT_LE(f_val(mu, L), 0) << L.to_json() << format_coweight(mu);
}

TEST(LeviInequality, Examples) {
  const auto zero = verify_levi_inequality({0, 0, 0, 0}, {0, 0, 0, 0}, kInterleaved4);
  EXPECT_TRUE(zero.holds);
  ASSERT_EQ(zero.witnesses.size(), 1u);
  EXPECT_EQ(zero.witnesses[0].mu, (Coweight{0, 0, 0, 0}));

  const auto torus = verify_levi_inequality({-1, 0}, {0, -1}, BlockLevi::torus(2));
  EXPECT_TRUE(torus.holds);
  ASSERT_EQ(torus.witnesses.size(), 1u);
  EXPECT_EQ(torus.witnesses[0].mu, (Coweight{-1, 0}));
  EXPECT_EQ(torus.witnesses[0].mu_prime, (Coweight{0, -1}));
  EXPECT_EQ(torus.witnesses[0].f, -1);
  EXPECT_EQ(torus.witnesses[0].rhs, -1);

  const auto json = levi_report_to_json(torus);
  EXPECT_NE(json.find("\"witnesses\""), std::string::npos);
}

TEST(LeviInequality, InterleavedSweep) {
  const auto sweep = sweep_levi_inequality(kInterleaved4, 2, 2, 2);
  EXPECT_TRUE(sweep.holds());
  EXPECT_TRUE(sweep.antistandard);
  EXPECT_LE(sweep.max_f, 0);
  EXPECT_GT(sweep.equalities, 0u);
  EXPECT_EQ(sweep.lambdas, 625u);
}

TEST(LeviInequality, SweepAgreesWithPairwiseChecks) {
  for (const auto& L : all_block_levis(3)) {
    const auto sweep = sweep_levi_inequality(L, 1, 1, 1);
    std::size_t mus = 0, equalities = 0;
    bool holds = true;
    for (const auto& nu : box(3, -1, 1)) {
      if (!is_G_dominant(nu)) continue;
      for (const auto& lambda : box(3, -1, 1)) {
        const auto r = verify_levi_inequality(lambda, nu, L);
        mus += r.checked;
        equalities += r.witnesses.size();
        holds = holds && r.holds;
      }
    }
    EXPECT_EQ(sweep.mus, mus) << L.to_json();
    EXPECT_EQ(sweep.equalities, equalities) << L.to_json();
    EXPECT_EQ(sweep.holds(), holds) << L.to_json();
  }
  EXPECT_THROW(sweep_levi_inequality(kInterleaved4, -1, 1), std::invalid_argument);
}

TEST(LeviInequality, SweepIsIndependentOfJobCount) {
  const auto a = sweep_levi_inequality(kInterleaved4, 1, 2, 1);
  const auto b = sweep_levi_inequality(kInterleaved4, 1, 2, 3);
  EXPECT_EQ(a.mus, b.mus);
  EXPECT_EQ(a.equalities, b.equalities);
  EXPECT_EQ(a.max_f, b.max_f);
  EXPECT_EQ(a.divergent_lambdas, b.divergent_lambdas);
}
