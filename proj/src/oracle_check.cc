#include "stepcount/oracle_check.h"

#include <sstream>

#include "stepcount/complexity.h"
#include "stepcount/interpreter.h"
#include "stepcount/oracles.h"
#include "stepcount/programs.h"
#include "stepcount/reader.h"

namespace stepcount {

OracleCheckReport RunOracleCheck(std::uint64_t max_n, const CostModel& costs) {
  OracleCheckReport report;
  report.max_n = max_n;
  StmtPtr program = BinarySearch(Var("key"), Var("lst"));
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    std::vector<Integer> lst = EvenList(n);
    Value lst_value = IntegerList(lst);
    for (const Integer& key : CanonicalProbes(lst)) {
      ++report.cases;
      VarEnv vars{{"KEY", Value::Int(key)}, {"LST", lst_value}};
      RunOutcome actual = Run(*program, RunStatus::kOk, vars, 0, n + 2, costs);
      RunOutcome expected = PredictBinarySearch(key, lst, vars).AsRunOutcome();
      Integer bs = RecursiveBs(key, lst);
      Integer bs2 = RecursiveBs2(key, lst);
      const Value* result = actual.vars.Lookup(kResultVar);

      std::ostringstream problem;
      if (actual != expected) {
        problem << "interpreter gave\n"
                << FormatRunOutcome(actual) << "\npredicted\n"
                << FormatRunOutcome(expected);
      } else if (bs != bs2) {
        problem << "recursive searches disagree: " << bs << " vs " << bs2;
      } else if (result == nullptr || *result != Value::Int(bs)) {
        problem << "RESULT " << (result ? FormatValue(*result) : "unset")
                << " differs from recursive search " << bs;
      }
      if (!problem.str().empty()) {
        report.pass = false;
        report.counterexample = "n = " + std::to_string(n) + ", key = " +
                                key.str() + ", lst = " + FormatValue(lst_value) + ": " +
                                problem.str();
        return report;
      }
    }
  }
  return report;
}

std::string FormatOracleReport(const OracleCheckReport& report) {
  std::ostringstream out;
  if (report.pass) {
    out << "PASS: interpreter matches predicted outcomes and recursive searches agree, "
        << report.cases << " cases, n = 1.." << report.max_n;
  } else {
    out << "FAIL: after " << report.cases << " cases, " << report.counterexample;
  }
  return out.str();
}

}  // namespace stepcount
