#ifndef STEPCOUNT_ORACLE_CHECK_H_
#define STEPCOUNT_ORACLE_CHECK_H_

#include <cstdint>
#include <string>

#include "stepcount/evaluator.h"

namespace stepcount {

struct OracleCheckReport {
  bool pass = true;
  std::uint64_t cases = 0;
  std::uint64_t max_n = 0;
  // Set on failure: the first mismatch, with the smallest n.
  std::string counterexample;
};

// For n = 1..max_n, runs the binary-search program on (0, 2, ..., 2(n-1))
// with every canonical probe and checks that
//   - the interpreter's outcome equals PredictBinarySearch exactly, and
//   - RecursiveBs, RecursiveBs2 and the interpreter's RESULT agree.
// Sizes are checked in ascending order and the first mismatch stops the
// run. `costs` exists so the harness itself can be checked against a
// perturbed cost model.
OracleCheckReport RunOracleCheck(std::uint64_t max_n, const CostModel& costs = {});

// "PASS: ..." or "FAIL: ..." on one line.
std::string FormatOracleReport(const OracleCheckReport& report);

}  // namespace stepcount

#endif  // STEPCOUNT_ORACLE_CHECK_H_
