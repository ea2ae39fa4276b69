#include "stepcount/oracles.h"

#include <gtest/gtest.h>

#include <random>

#include "stepcount/complexity.h"
#include "stepcount/programs.h"
#include "test_support.h"

namespace stepcount {
namespace {

using testing::Ints;

std::vector<Integer> IntVec(std::initializer_list<int> values) {
  return std::vector<Integer>(values.begin(), values.end());
}

TEST(Log2Test, Values) {
  EXPECT_EQ(Log2(0), 0u);
  EXPECT_EQ(Log2(1), 1u);
  EXPECT_EQ(Log2(8), 4u);
  EXPECT_EQ(Log2(26), 5u);
  EXPECT_EQ(Log2(4096), 13u);
}

TEST(Log2Test, IsFloorLgPlusOne) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    std::uint64_t floor_lg = 0;
    while ((std::uint64_t{2} << floor_lg) <= n) ++floor_lg;
    ASSERT_EQ(Log2(n), floor_lg + 1) << n;
    ASSERT_LE(Log2(n), Log2(n + 1));
    ASSERT_EQ(Log2(2 * n), 1 + Log2(n));
  }
}

TEST(RecursiveBsHelperTest, HitTrace) {
  BSTrace trace = RecursiveBsHelper(4, IntVec({0, 1, 2, 3, 4, 5, 6, 7}), 0,
                                    std::nullopt, 7, 0);
  EXPECT_EQ(trace, (BSTrace{true, 4, Integer(4), 4, 2}));
}

TEST(RecursiveBsHelperTest, EmptyRange) {
  BSTrace trace = RecursiveBsHelper(4, IntVec({1, 2}), 3, Integer(1), 2, 5);
  EXPECT_EQ(trace, (BSTrace{false, 3, Integer(1), 2, 5}));
  BSTrace negative_low = RecursiveBsHelper(4, IntVec({1, 2}), -1, std::nullopt, 1, 0);
  EXPECT_FALSE(negative_low.success);
  EXPECT_EQ(negative_low.calls, 0u);
}

TEST(RecursiveBsHelperTest, MissTrace) {
  BSTrace trace =
      RecursiveBsHelper(4, IntVec({0, 1, 3, 5, 7, 9, 10}), 0, std::nullopt, 6, 0);
  EXPECT_FALSE(trace.success);
  EXPECT_EQ(trace.calls, 3u);
  EXPECT_EQ(trace.low, 3);
  EXPECT_EQ(trace.high, 2);
  EXPECT_EQ(trace.mid, Integer(2));
}

TEST(RecursiveBsTest, Results) {
  EXPECT_EQ(RecursiveBs(4, IntVec({0, 1, 2, 3, 4, 5, 6, 7})), 4);
  EXPECT_EQ(RecursiveBs(4, IntVec({0, 1, 3, 5, 7, 9, 10})), -1);
  EXPECT_EQ(RecursiveBs(4, {}), -1);
  EXPECT_EQ(RecursiveBs2(4, IntVec({0, 1, 2, 3, 4, 5, 6, 7})), 4);
  EXPECT_EQ(RecursiveBs2(4, IntVec({0, 1, 3, 5, 7, 9, 10})), -1);
  EXPECT_EQ(RecursiveBs2(4, {}), -1);
}

TEST(SortedTest, Predicates) {
  EXPECT_TRUE(IsSorted(Ints({0, 1, 3, 5})));
  EXPECT_FALSE(IsSorted(Ints({1, 0})));
  EXPECT_TRUE(IsSorted(Value()));
  EXPECT_TRUE(IsSorted(Ints({2, 2, 3})));
  EXPECT_FALSE(IsSorted(Value::MakeList({Value::Int(1), Value::Symbol("a")})));
  EXPECT_TRUE(IsNumberList(Ints({3, 1})));
  EXPECT_TRUE(IsNumberList(Value()));
  EXPECT_FALSE(IsNumberList(Value::Int(3)));
  EXPECT_FALSE(IsNumberList(Value::MakeList({Value::Symbol("a")})));
}

TEST(PredictTest, TranscriptCases) {
  PredictedOutcome hit = PredictBinarySearch(4, IntVec({0, 1, 2, 3, 4, 5, 6, 7}), {});
  EXPECT_EQ(hit.steps, 77u);
  EXPECT_EQ(hit.vars, (VarEnv{{"LOW", Value::Int(4)},
                              {"HIGH", Value::Int(4)},
                              {"MID", Value::Int(4)},
                              {"RESULT", Value::Int(4)}}));

  VarEnv vars{{"KEY", Value::Int(4)}, {"LST", Ints({0, 1, 3, 5, 7, 9, 10})}};
  PredictedOutcome miss = PredictBinarySearch(4, IntVec({0, 1, 3, 5, 7, 9, 10}), vars);
  EXPECT_EQ(miss.steps, 91u);
  EXPECT_EQ(*miss.vars.Lookup("RESULT"), Value::Int(-1));
  EXPECT_EQ(miss.vars.size(), 6u);

  PredictedOutcome empty = PredictBinarySearch(0, {}, {});
  EXPECT_EQ(empty.steps, 13u);
  EXPECT_EQ(empty.vars, (VarEnv{{"LOW", Value::Int(0)},
                                {"HIGH", Value::Int(-1)},
                                {"RESULT", Value::Int(-1)}}));
}

// calls never exceeds Log2(n), checked over every element and gap.
TEST(CallBoundProperty, CallsAtMostLog2) {
  for (std::size_t n = 1; n <= 256; ++n) {
    std::vector<Integer> lst = EvenList(n);
    for (const Integer& key : CanonicalProbes(lst)) {
      BSTrace trace = RecursiveBsHelper(key, lst, 0, std::nullopt, Integer(n) - 1, 0);
      ASSERT_LE(trace.calls, Log2(n)) << "n=" << n << " key=" << key;
    }
  }
}

TEST(SearchProperty, RandomSortedListsWithDuplicates) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, 200)(rng);
    std::vector<Integer> lst;
    for (std::size_t k = 0; k < n; ++k) {
      lst.emplace_back(std::uniform_int_distribution<int>(-50, 50)(rng));
    }
    std::sort(lst.begin(), lst.end());
    Integer key = std::uniform_int_distribution<int>(-55, 55)(rng);
    Integer index = RecursiveBs2(key, lst);
    bool member = std::find(lst.begin(), lst.end(), key) != lst.end();
    if (member) {
      ASSERT_EQ(lst[static_cast<std::size_t>(index)], key);
    } else {
      ASSERT_EQ(index, -1);
    }
    ASSERT_EQ(RecursiveBs(key, lst), index);
  }
}

}  // namespace
}  // namespace stepcount
