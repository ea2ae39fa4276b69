#include "stepcount/oracle_check.h"

#include <gtest/gtest.h>

namespace stepcount {
namespace {

TEST(OracleCheckTest, PassesWithUnitCosts) {
  OracleCheckReport report = RunOracleCheck(12);
  EXPECT_TRUE(report.pass) << report.counterexample;
  EXPECT_EQ(report.cases, 168u);
}

TEST(OracleCheckTest, SingleElementHasThreeProbes) {
  OracleCheckReport report = RunOracleCheck(1);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.cases, 3u);
}

// A harness that cannot see a perturbed cost model checks nothing.
TEST(OracleCheckTest, DetectsOffByOneAssignCost) {
  CostModel costs;
  costs.assign = 2;
  OracleCheckReport report = RunOracleCheck(12, costs);
  ASSERT_FALSE(report.pass);
  EXPECT_EQ(report.cases, 1u);
  EXPECT_EQ(report.counterexample.rfind("n = 1, key = -1", 0), 0u) << report.counterexample;
  EXPECT_EQ(FormatOracleReport(report).rfind("FAIL:", 0), 0u);
}

TEST(OracleCheckTest, DetectsCheaperLoopTest) {
  CostModel costs;
  costs.while_test = 0;
  EXPECT_FALSE(RunOracleCheck(4, costs).pass);
}

}  // namespace
}  // namespace stepcount
