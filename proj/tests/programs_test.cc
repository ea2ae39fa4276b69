#include "stepcount/programs.h"

#include <gtest/gtest.h>

#include "stepcount/interpreter.h"
#include "stepcount/oracles.h"
#include "stepcount/reader.h"
#include "test_support.h"

namespace stepcount {
namespace {

using testing::Ints;

RunOutcome RunFamily(const StmtPtr& program, const Value& key, const Value& lst,
                     std::uint64_t count = 1000) {
  return stepcount::Run(*program, RunStatus::kOk, VarEnv{{"KEY", key}, {"LST", lst}}, 0, count);
}

Value ResultOf(const RunOutcome& out) {
  const Value* v = out.vars.Lookup(kResultVar);
  return v ? *v : Value::Symbol("unset");
}

TEST(BinarySearchTest, MatchesSourceTextVerbatim) {
  const char* kText = R"(
    (seqn (assign (var low) (lit . 0))
          (assign (var high) (- (len (var lst)) (lit . 1)))
          (while (<= (var low) (var high))
            (seq (assign (var mid)
                         (// (+ (var low) (var high)) (lit . 2)))
                 (if-else (== (var key) (ind (var mid) (var lst)))
                          (return (var mid))
                          (if-else (< (var key) (ind (var mid) (var lst)))
                                   (assign (var high)
                                           (- (var mid) (lit . 1)))
                                   (assign (var low)
                                           (+ (var mid) (lit . 1)))))))
          (return (lit . -1))))";
  EXPECT_EQ(*ParseStmt(kText), *BinarySearch(Var("key"), Var("lst")));
}

TEST(BinarySearchTest, EmptyListLiteral) {
  // 7 for the two initial assignments, 4 for the failing loop test, 2 for
  // the final return.
  RunOutcome out = stepcount::Run(*BinarySearch(Lit(0), Lit(Value())), RunStatus::kOk, {}, 0, 10);
  EXPECT_EQ(out, (RunOutcome{RunStatus::kReturned,
                             VarEnv{{"LOW", Value::Int(0)},
                                    {"HIGH", Value::Int(-1)},
                                    {"RESULT", Value::Int(-1)}},
                             13}));
}

TEST(BinarySearchTest, TerminatesWithLogarithmicClock) {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::vector<Integer> lst = EvenList(n);
    StmtPtr program = BinarySearch(Var("key"), Var("lst"));
    for (int key = -1; key <= static_cast<int>(2 * n); ++key) {
      RunOutcome out = RunFamily(program, Value::Int(key), IntegerList(lst), Log2(n) + 2);
      EXPECT_EQ(out.status, RunStatus::kReturned) << "n=" << n << " key=" << key;
    }
  }
}

TEST(BinarySearchAltTest, SameResultsDifferentSteps) {
  StmtPtr plain = BinarySearch(Var("key"), Var("lst"));
  StmtPtr alt = BinarySearchAlt(Var("key"), Var("lst"));
  Value lst = Ints({0, 1, 2, 3, 4, 5, 6, 7});
  bool differ = false;
  for (int key = -1; key <= 8; ++key) {
    RunOutcome a = RunFamily(plain, Value::Int(key), lst);
    RunOutcome b = RunFamily(alt, Value::Int(key), lst);
    EXPECT_EQ(ResultOf(a), ResultOf(b)) << key;
    differ |= a.steps != b.steps;
  }
  EXPECT_TRUE(differ);
  // key 6 goes up twice before the hit: 7 + 26 + 26 + 18 versus
  // 7 + 26 + 26 + 24 with the reordered tests.
  EXPECT_EQ(RunFamily(plain, Value::Int(6), lst).steps, 77u);
  EXPECT_EQ(RunFamily(alt, Value::Int(6), lst).steps, 83u);
}

TEST(BinarySearchAltTest, LowerMovesAreCheaperThanUpperMoves) {
  StmtPtr alt = BinarySearchAlt(Var("key"), Var("lst"));
  Value lst = Ints({0, 2, 4, 6, 8, 10, 12});
  // Probe -1 only ever moves down (3 moves), probe 13 only up (3 moves).
  std::uint64_t down = RunFamily(alt, Value::Int(-1), lst).steps;
  std::uint64_t up = RunFamily(alt, Value::Int(13), lst).steps;
  EXPECT_EQ(down, 7u + 3 * 20 + 6);
  EXPECT_EQ(up, 7u + 3 * 26 + 6);
  StmtPtr plain = BinarySearch(Var("key"), Var("lst"));
  EXPECT_EQ(RunFamily(plain, Value::Int(-1), lst).steps,
            RunFamily(plain, Value::Int(13), lst).steps);
}

TEST(LinearSearchTest, FindsFirstOccurrence) {
  StmtPtr program = LinearSearch(Var("key"), Var("lst"));
  Value lst = Ints({5, 3, 5, 9, 3});
  for (int key = 0; key <= 10; ++key) {
    long long expected = -1;
    const auto& items = lst.elements();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i] == Value::Int(key)) {
        expected = static_cast<long long>(i);
        break;
      }
    }
    EXPECT_EQ(ResultOf(RunFamily(program, Value::Int(key), lst)), Value::Int(expected))
        << key;
  }
  EXPECT_EQ(ResultOf(RunFamily(program, Value::Int(1), Value())), Value::Int(-1));
}

// The miss cost is affine in n; the constants are fitted here, not assumed.
TEST(LinearSearchTest, MissStepsAreExactlyAffine) {
  StmtPtr program = LinearSearch(Var("key"), Var("lst"));
  std::vector<std::uint64_t> steps;
  for (std::size_t n = 1; n <= 32; ++n) {
    RunOutcome out = RunFamily(program, Value::Int(-1), IntegerList(EvenList(n)), n + 2);
    ASSERT_EQ(out.status, RunStatus::kReturned);
    steps.push_back(out.steps);
  }
  std::uint64_t slope = steps[1] - steps[0];
  std::uint64_t intercept = steps[0] - slope;
  for (std::size_t n = 1; n <= 32; ++n) {
    EXPECT_EQ(steps[n - 1], intercept + slope * n) << n;
  }
  EXPECT_EQ(slope, 15u);
  EXPECT_EQ(intercept, 9u);
}

TEST(FamiliesTest, LookupAndRoundTrip) {
  ASSERT_EQ(Families().size(), 3u);
  for (const char* name : {"binarysearch", "binarysearch-alt", "linear-search"}) {
    const ProgramFamily* family = FindFamily(name);
    ASSERT_NE(family, nullptr) << name;
    StmtPtr program = family->Program();
    EXPECT_EQ(*ParseStmt(PrintStmt(*program)), *program);
    VarEnv env = family->input_builder(4, Value::Int(3));
    EXPECT_EQ(*env.Lookup("KEY"), Value::Int(3));
    EXPECT_EQ(*env.Lookup("LST"), Ints({0, 2, 4, 6}));
  }
  EXPECT_EQ(FindFamily("bubble-sort"), nullptr);
}

}  // namespace
}  // namespace stepcount
