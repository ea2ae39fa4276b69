#include "stepcount/syntax.h"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stepcount {
namespace {

constexpr std::array<std::pair<BinaryOp, std::string_view>, 9> kOperators{{
    {BinaryOp::kEq, "=="},
    {BinaryOp::kAdd, "+"},
    {BinaryOp::kSub, "-"},
    {BinaryOp::kMul, "*"},
    {BinaryOp::kFloorDiv, "//"},
    {BinaryOp::kLt, "<"},
    {BinaryOp::kLe, "<="},
    {BinaryOp::kGt, ">"},
    {BinaryOp::kGe, ">="},
}};

template <class Node>
ExprPtr MakeExpr(Node node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

template <class Node>
StmtPtr MakeStmt(Node node) {
  return std::make_shared<const Stmt>(Stmt{std::move(node)});
}

bool SameExpr(const ExprPtr& a, const ExprPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool SameStmt(const StmtPtr& a, const StmtPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

std::string_view OperatorName(BinaryOp op) {
  for (const auto& [candidate, name] : kOperators) {
    if (candidate == op) return name;
  }
  return "?";
}

std::optional<BinaryOp> OperatorFromName(std::string_view name) {
  for (const auto& [op, spelling] : kOperators) {
    if (spelling == name) return op;
  }
  return std::nullopt;
}

ExprPtr Var(std::string_view name) { return MakeExpr(VarExpr{CanonicalSymbol(name)}); }
ExprPtr Lit(Value v) { return MakeExpr(LitExpr{std::move(v)}); }
ExprPtr Lit(long long v) { return Lit(Value::Int(v)); }
ExprPtr Binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return MakeExpr(BinaryExpr{op, std::move(lhs), std::move(rhs)});
}
ExprPtr Len(ExprPtr arg) { return MakeExpr(LenExpr{std::move(arg)}); }
ExprPtr Ind(ExprPtr index, ExprPtr list) {
  return MakeExpr(IndExpr{std::move(index), std::move(list)});
}

StmtPtr Skip() { return MakeStmt(SkipStmt{}); }
StmtPtr Assign(std::string_view target, ExprPtr rhs) {
  return MakeStmt(AssignStmt{CanonicalSymbol(target), std::move(rhs)});
}
StmtPtr Return(ExprPtr rhs) { return MakeStmt(ReturnStmt{std::move(rhs)}); }
StmtPtr IfElse(ExprPtr test, StmtPtr then_branch, StmtPtr else_branch) {
  return MakeStmt(
      IfElseStmt{std::move(test), std::move(then_branch), std::move(else_branch)});
}
StmtPtr While(ExprPtr test, StmtPtr body) {
  return MakeStmt(WhileStmt{std::move(test), std::move(body)});
}
StmtPtr Seq(StmtPtr first, StmtPtr second) {
  return MakeStmt(SeqStmt{std::move(first), std::move(second)});
}

StmtPtr Seqn(std::initializer_list<StmtPtr> stmts) {
  if (stmts.size() == 0) throw std::invalid_argument("Seqn of no statements");
  std::vector<StmtPtr> items(stmts);
  StmtPtr out = items.back();
  for (auto it = items.rbegin() + 1; it != items.rend(); ++it) {
    out = Seq(*it, std::move(out));
  }
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, VarExpr>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, LitExpr>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return lhs.op == rhs.op && SameExpr(lhs.lhs, rhs.lhs) &&
                 SameExpr(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, LenExpr>) {
          return SameExpr(lhs.arg, rhs.arg);
        } else {
          return SameExpr(lhs.index, rhs.index) && SameExpr(lhs.list, rhs.list);
        }
      },
      a.node);
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, SkipStmt>) {
          return true;
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          return lhs.target == rhs.target && SameExpr(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          return SameExpr(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, IfElseStmt>) {
          return SameExpr(lhs.test, rhs.test) &&
                 SameStmt(lhs.then_branch, rhs.then_branch) &&
                 SameStmt(lhs.else_branch, rhs.else_branch);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          return SameExpr(lhs.test, rhs.test) && SameStmt(lhs.body, rhs.body);
        } else {
          return SameStmt(lhs.first, rhs.first) && SameStmt(lhs.second, rhs.second);
        }
      },
      a.node);
}

}  // namespace stepcount
