#include "stepcount/interpreter.h"

#include <array>
#include <utility>

#include "stepcount/reader.h"

namespace stepcount {
namespace {

constexpr std::array<std::pair<RunStatus, std::string_view>, 4> kStatusNames{{
    {RunStatus::kOk, "OK"},
    {RunStatus::kReturned, "RETURNED"},
    {RunStatus::kError, "ERROR"},
    {RunStatus::kTimedOut, "TIMED-OUT"},
}};

RunOutcome RunError(VarEnv vars) { return {RunStatus::kError, std::move(vars), 0}; }

class Machine {
 public:
  explicit Machine(const CostModel& costs) : costs_(costs) {}

  RunOutcome Exec(const Stmt& stmt, RunStatus status, VarEnv vars, std::uint64_t steps,
                  std::uint64_t count) const {
    if (status != RunStatus::kOk) return {status, std::move(vars), steps};
    if (count == 0) return {RunStatus::kTimedOut, std::move(vars), steps};
    return std::visit(
        [&](const auto& node) {
          return ExecNode(node, std::move(vars), steps, count);
        },
        stmt.node);
  }

 private:
  RunOutcome ExecNode(const SkipStmt&, VarEnv vars, std::uint64_t steps,
                      std::uint64_t) const {
    return {RunStatus::kOk, std::move(vars), steps};
  }

  RunOutcome ExecNode(const AssignStmt& node, VarEnv vars, std::uint64_t steps,
                      std::uint64_t) const {
    EvalOutcome rhs = Evaluate(*node.rhs, true, vars, costs_);
    if (!rhs.ok) return RunError(std::move(vars));
    vars.Store(node.target, std::move(rhs.value));
    return {RunStatus::kOk, std::move(vars), steps + costs_.assign + rhs.steps};
  }

  RunOutcome ExecNode(const ReturnStmt& node, VarEnv vars, std::uint64_t steps,
                      std::uint64_t) const {
    EvalOutcome rhs = Evaluate(*node.rhs, true, vars, costs_);
    if (!rhs.ok) return RunError(std::move(vars));
    vars.Store(kResultVar, std::move(rhs.value));
    return {RunStatus::kReturned, std::move(vars), steps + costs_.ret + rhs.steps};
  }

  RunOutcome ExecNode(const SeqStmt& node, VarEnv vars, std::uint64_t steps,
                      std::uint64_t count) const {
    RunOutcome first = Exec(*node.first, RunStatus::kOk, std::move(vars), steps, count);
    return Exec(*node.second, first.status, std::move(first.vars), first.steps, count);
  }

  RunOutcome ExecNode(const IfElseStmt& node, VarEnv vars, std::uint64_t steps,
                      std::uint64_t count) const {
    EvalOutcome test = Evaluate(*node.test, true, vars, costs_);
    if (!test.ok) return RunError(std::move(vars));
    const Stmt& branch = test.value.truthy() ? *node.then_branch : *node.else_branch;
    return Exec(branch, RunStatus::kOk, std::move(vars),
                steps + costs_.if_test + test.steps, count);
  }

  // Each pass of this loop is one (re-)entry of the while statement: the
  // body's outcome feeds the next entry with the clock decremented.
  RunOutcome ExecNode(const WhileStmt& node, VarEnv vars, std::uint64_t steps,
                      std::uint64_t count) const {
    RunStatus status = RunStatus::kOk;
    while (true) {
      if (status != RunStatus::kOk) return {status, std::move(vars), steps};
      if (count == 0) return {RunStatus::kTimedOut, std::move(vars), steps};
      EvalOutcome test = Evaluate(*node.test, true, vars, costs_);
      if (!test.ok) return RunError(std::move(vars));
      steps += costs_.while_test + test.steps;
      if (!test.value.truthy()) return {RunStatus::kOk, std::move(vars), steps};
      RunOutcome body = Exec(*node.body, status, std::move(vars), steps, count);
      status = body.status;
      vars = std::move(body.vars);
      steps = body.steps;
      --count;
    }
  }

  const CostModel& costs_;
};

}  // namespace

std::string_view StatusName(RunStatus status) {
  for (const auto& [candidate, name] : kStatusNames) {
    if (candidate == status) return name;
  }
  return "?";
}

std::optional<RunStatus> StatusFromName(std::string_view name) {
  std::string canonical = CanonicalSymbol(name);
  for (const auto& [status, spelling] : kStatusNames) {
    if (spelling == canonical) return status;
  }
  return std::nullopt;
}

RunOutcome Run(const Stmt& stmt, RunStatus status, VarEnv vars, std::uint64_t steps,
               std::uint64_t count, const CostModel& costs) {
  return Machine(costs).Exec(stmt, status, std::move(vars), steps, count);
}

std::string FormatRunOutcome(const RunOutcome& outcome) {
  std::string head = "(" + std::string(StatusName(outcome.status)) + " ";
  std::string steps = std::to_string(outcome.steps);
  if (outcome.vars.empty()) return head + "NIL " + steps + ")";
  std::string out = head + "(";
  std::string indent(head.size() + 1, ' ');
  bool first = true;
  for (const auto& binding : outcome.vars.bindings()) {
    if (!first) out += "\n" + indent;
    first = false;
    out += FormatBinding(binding);
  }
  out += ")\n" + std::string(head.size(), ' ') + steps + ")";
  return out;
}

}  // namespace stepcount
