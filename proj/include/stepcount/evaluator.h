#ifndef STEPCOUNT_EVALUATOR_H_
#define STEPCOUNT_EVALUATOR_H_

#include <cstdint>

#include "stepcount/env.h"
#include "stepcount/syntax.h"
#include "stepcount/value.h"

namespace stepcount {

// Step charges per construct. The default is one step for every expression
// node, and one step for each assign, return, branch test and loop test on top
// of the steps of the expression it evaluates. Only tests that probe the
// oracle harness should use anything else.
struct CostModel {
  std::uint64_t var = 1;
  std::uint64_t lit = 1;
  std::uint64_t binary = 1;
  std::uint64_t len = 1;
  std::uint64_t ind = 1;
  std::uint64_t assign = 1;
  std::uint64_t ret = 1;
  std::uint64_t if_test = 1;
  std::uint64_t while_test = 1;

  friend bool operator==(const CostModel&, const CostModel&) = default;
};

// Result of evaluating an expression. On error, `value` is NIL and `steps`
// is 0; the cause of an error is not recorded.
struct EvalOutcome {
  bool ok = false;
  Value value;
  std::uint64_t steps = 0;

  static EvalOutcome Error() { return {}; }
  friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;
};

// Evaluates `expr` under `vars` with exact step accounting.
//
// Arithmetic and comparisons accept integers only; comparisons give T or
// NIL. `//` is floor division and fails on a zero divisor. `len` needs a
// list, `ind` a natural index below the list's length. Any failure anywhere
// makes the whole evaluation fail. A false `status` fails immediately.
EvalOutcome Evaluate(const Expr& expr, bool status, const VarEnv& vars,
                     const CostModel& costs = {});

// Floor division, rounding toward negative infinity. `divisor` must be
// nonzero.
Integer FloorDivide(const Integer& dividend, const Integer& divisor);

}  // namespace stepcount

#endif  // STEPCOUNT_EVALUATOR_H_
