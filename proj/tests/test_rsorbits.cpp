#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <stdexcept>

#include "linper/rsorbits.hpp"
#include "linper/schur.hpp"

using namespace linper;

TEST(ClassifyingPairs, SmallestCase) {
  const auto pairs = bar_E(1, 1);
  ASSERT_EQ(pairs.size(), 3u);
  const std::string first = R"j({"w":"()","J":[1]})j";
  const std::string last = R"j({"w":"(1 2)","J":[2]})j";
  EXPECT_EQ(pairs[0].to_json(), first);
  EXPECT_EQ(pairs[2].to_json(), last);
  const auto dual = dual_bar_E(1, 1);
  ASSERT_EQ(dual.size(), 3u);
  const std::string dual_last = R"j({"w":"(1 2)","J":[1]})j";
  EXPECT_EQ(dual[2].to_json(), dual_last);
}

TEST(ClassifyingPairs, EmptyAndDegenerate) {
  EXPECT_EQ(bar_E(0, 0).size(), 1u);
  EXPECT_EQ(bar_E(0, 3).size(), 1u);  // J empty forces w = id
  EXPECT_EQ(bar_E(3, 0).size(), 1u);  // J everything forces Lo(w) empty
  EXPECT_THROW(bar_E(-1, 2), std::invalid_argument);
}

TEST(ClassifyingPairs, CountsMatchTwoCycleFormula) {
  for (int n = 0; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      const int dp = n - d;
      std::int64_t expected = 0;
      for (const auto& w : all_involutions(n)) {
        const int c = static_cast<int>(w.hi().size());
        if (c <= d && c <= dp) expected += binomial(n - 2 * c, d - c);
      }
      EXPECT_EQ(static_cast<std::int64_t>(bar_E(d, dp).size()), expected) << d << "," << dp;
      EXPECT_EQ(bar_E(d, dp).size(), dual_bar_E(d, dp).size()) << d << "," << dp;
    }
}

TEST(ClassifyingPairs, MembershipConditions) {
  for (const auto& p : bar_E(2, 3)) {
    for (int h : p.w.hi()) EXPECT_TRUE(std::binary_search(p.J.begin(), p.J.end(), h));
    for (int l : p.w.lo()) EXPECT_FALSE(std::binary_search(p.J.begin(), p.J.end(), l));
    EXPECT_EQ(p.J.size(), 2u);
  }
}

TEST(Orbits, FlagCount) {
  EXPECT_EQ(flag_count(0, 2), 1);
  EXPECT_EQ(flag_count(3, 2), 21);
  EXPECT_EQ(flag_count(3, 3), 52);
  EXPECT_EQ(flag_count(4, 2), 315);
}

TEST(Orbits, KnownCounts) {
  EXPECT_EQ(k_orbits(1, 1, 2), 3);
  EXPECT_EQ(k_orbits(1, 1, 3), 3);
  EXPECT_EQ(k_orbits(1, 2, 2), 6);
  EXPECT_EQ(k_orbits(2, 2, 2), 21);
  EXPECT_EQ(k_orbits(0, 3, 2), 1);
}

TEST(Orbits, MatchClassifyingPairs) {
  for (int q : {2, 3})
    for (int n = 0; n <= orbit_size_limit(q); ++n)
      for (int d = 0; d <= n; ++d) EXPECT_TRUE(verify_counts(d, n - d, q)) << d << "," << n - d << " q=" << q;
}

TEST(Orbits, SizesPartitionTheFlagVariety) {
  for (int q : {2, 3})
    for (int n = 1; n <= orbit_size_limit(q); ++n)
      for (int d = 0; d <= n; ++d) {
        const auto dec = k_orbit_decomposition(d, n - d, q);
        EXPECT_EQ(dec.flag_count, flag_count(n, q));
        EXPECT_EQ(std::accumulate(dec.orbit_sizes.begin(), dec.orbit_sizes.end(), std::int64_t{0}), dec.flag_count);
        EXPECT_TRUE(std::is_sorted(dec.orbit_sizes.rbegin(), dec.orbit_sizes.rend()));
      }
}

TEST(Orbits, SizeBoundsAreEnforced) {
  EXPECT_THROW(k_orbits(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(k_orbits(2, 2, 3), std::invalid_argument);
  EXPECT_THROW(k_orbits(1, 1, 5), std::invalid_argument);
}
