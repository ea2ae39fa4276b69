#ifndef STEPCOUNT_INTERPRETER_H_
#define STEPCOUNT_INTERPRETER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stepcount/env.h"
#include "stepcount/evaluator.h"
#include "stepcount/syntax.h"

namespace stepcount {

// Execution proceeds only while the status is kOk.
enum class RunStatus { kOk, kReturned, kError, kTimedOut };

// "OK", "RETURNED", "ERROR", "TIMED-OUT".
std::string_view StatusName(RunStatus status);
std::optional<RunStatus> StatusFromName(std::string_view name);

// Variable that `return` stores into.
inline constexpr std::string_view kResultVar = "RESULT";

struct RunOutcome {
  RunStatus status = RunStatus::kOk;
  VarEnv vars;
  std::uint64_t steps = 0;

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

// Clocked big-step execution of `stmt`.
//
// A non-OK `status` passes through untouched; a zero `count` gives
// TIMED-OUT. `count` drops by one each time a while loop re-tests after its
// body, and is passed unchanged into seq and if-else, so it bounds the loop
// re-tests of the whole run. Skip is free. Assign and return charge one step
// plus their expression; if-else and while charge one plus their test. A
// failed expression gives (ERROR, vars, 0).
RunOutcome Run(const Stmt& stmt, RunStatus status, VarEnv vars, std::uint64_t steps,
               std::uint64_t count, const CostModel& costs = {});

// Lisp-printer layout of an outcome, e.g.
//   (RETURNED ((LOW . 4)
//              (RESULT . 4))
//             77)
std::string FormatRunOutcome(const RunOutcome& outcome);

}  // namespace stepcount

#endif  // STEPCOUNT_INTERPRETER_H_
