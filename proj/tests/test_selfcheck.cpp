#include <gtest/gtest.h>

#include <stdexcept>

#include "linper/selfcheck.hpp"

using namespace linper;

TEST(Bounds, DefaultsAndCaps) {
  Bounds b;
  EXPECT_EQ(b.get("levi.N"), 4);
  EXPECT_EQ(b.get("levi.bound"), 2);
  EXPECT_FALSE(b.set("levi.N", 4));
  EXPECT_TRUE(b.set("levi.N", 5));
  EXPECT_EQ(b.get("levi.N"), 5);
  EXPECT_THROW(b.set("levi.N", 6), std::invalid_argument);
  EXPECT_THROW(b.set("levi.bound", 1), std::invalid_argument);
  EXPECT_THROW(b.get("nosuch"), std::invalid_argument);
}

TEST(Bounds, ParsesAssignments) {
  Bounds b;
  EXPECT_TRUE(b.set_from_string("schur.d=5"));
  EXPECT_EQ(b.get("schur.d"), 5);
  EXPECT_THROW(b.set_from_string("schur.d"), std::invalid_argument);
  EXPECT_THROW(b.set_from_string("schur.d=5x"), std::invalid_argument);
  EXPECT_THROW(b.set_from_string("schur.d=five"), std::invalid_argument);
}

TEST(Bounds, EveryDefaultIsWithinItsCap) {
  const Bounds b;
  for (const auto& [key, e] : b.entries()) {
    EXPECT_LE(e.default_value, e.cap) << key;
    EXPECT_EQ(e.value, e.default_value) << key;
    EXPECT_FALSE(e.help.empty()) << key;
  }
}

TEST(Criteria, NamesAreStable) {
  EXPECT_EQ(criterion_name(1), "schur-multiplicity-free");
  EXPECT_EQ(criterion_name(8), "levi-coweight-inequality");
  EXPECT_EQ(criterion_name(9), "identity-audits");
  EXPECT_THROW(run_criterion(0, Bounds(), 1), std::invalid_argument);
  EXPECT_THROW(run_criterion(10, Bounds(), 1), std::invalid_argument);
}

TEST(Criteria, QuickCriteriaPass) {
  for (int id : {1, 2, 4, 5, 6, 7, 9}) {
    const auto r = run_criterion(id, Bounds(), 1);
    EXPECT_TRUE(r.passed()) << r.summary_line();
    EXPECT_TRUE(r.failures.empty()) << r.summary_line();
    EXPECT_GT(r.cases, 0u) << r.summary_line();
    EXPECT_EQ(r.summary_line().rfind("PASS", 0), 0u) << r.summary_line();
  }
}

TEST(Criteria, BudgetOverrunFails) {
  CriterionResult r;
  r.checks_passed = true;
  r.seconds = 2;
  r.budget_seconds = 1;
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.summary_line().rfind("FAIL", 0), 0u);
}
