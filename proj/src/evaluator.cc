#include "stepcount/evaluator.h"

#include <type_traits>

namespace stepcount {
namespace {

class Evaluator {
 public:
  Evaluator(const VarEnv& vars, const CostModel& costs) : vars_(vars), costs_(costs) {}

  EvalOutcome Eval(const Expr& expr) const {
    return std::visit([&](const auto& node) { return EvalNode(node); }, expr.node);
  }

 private:
  EvalOutcome EvalNode(const VarExpr& node) const {
    const Value* value = vars_.Lookup(node.name);
    if (value == nullptr) return EvalOutcome::Error();
    return {true, *value, costs_.var};
  }

  EvalOutcome EvalNode(const LitExpr& node) const {
    return {true, node.value, costs_.lit};
  }

  EvalOutcome EvalNode(const BinaryExpr& node) const {
    EvalOutcome lhs = Eval(*node.lhs);
    EvalOutcome rhs = Eval(*node.rhs);
    if (!lhs.ok || !rhs.ok || !lhs.value.is_int() || !rhs.value.is_int()) {
      return EvalOutcome::Error();
    }
    const Integer& a = lhs.value.as_int();
    const Integer& b = rhs.value.as_int();
    std::uint64_t steps = costs_.binary + lhs.steps + rhs.steps;
    switch (node.op) {
      case BinaryOp::kEq:
        return {true, Value::Bool(a == b), steps};
      case BinaryOp::kAdd:
        return {true, Value::Int(a + b), steps};
      case BinaryOp::kSub:
        return {true, Value::Int(a - b), steps};
      case BinaryOp::kMul:
        return {true, Value::Int(a * b), steps};
      case BinaryOp::kFloorDiv:
        if (b == 0) return EvalOutcome::Error();
        return {true, Value::Int(FloorDivide(a, b)), steps};
      case BinaryOp::kLt:
        return {true, Value::Bool(a < b), steps};
      case BinaryOp::kLe:
        return {true, Value::Bool(a <= b), steps};
      case BinaryOp::kGt:
        return {true, Value::Bool(a > b), steps};
      case BinaryOp::kGe:
        return {true, Value::Bool(a >= b), steps};
    }
    return EvalOutcome::Error();
  }

  EvalOutcome EvalNode(const LenExpr& node) const {
    EvalOutcome arg = Eval(*node.arg);
    if (!arg.ok || !arg.value.is_list()) return EvalOutcome::Error();
    return {true, Value::Int(arg.value.elements().size()), costs_.len + arg.steps};
  }

  EvalOutcome EvalNode(const IndExpr& node) const {
    EvalOutcome index = Eval(*node.index);
    EvalOutcome list = Eval(*node.list);
    if (!index.ok || !list.ok || !index.value.is_int() || !list.value.is_list()) {
      return EvalOutcome::Error();
    }
    const Integer& i = index.value.as_int();
    const auto& elements = list.value.elements();
    if (i < 0 || i >= elements.size()) return EvalOutcome::Error();
    return {true, elements[static_cast<std::size_t>(i)],
            costs_.ind + index.steps + list.steps};
  }

  const VarEnv& vars_;
  const CostModel& costs_;
};

}  // namespace

Integer FloorDivide(const Integer& dividend, const Integer& divisor) {
  Integer quotient = dividend / divisor;  // truncates toward zero
  Integer remainder = dividend % divisor;
  if (remainder != 0 && ((remainder < 0) != (divisor < 0))) --quotient;
  return quotient;
}

EvalOutcome Evaluate(const Expr& expr, bool status, const VarEnv& vars,
                     const CostModel& costs) {
  if (!status) return EvalOutcome::Error();
  return Evaluator(vars, costs).Eval(expr);
}

}  // namespace stepcount
