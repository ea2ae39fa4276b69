#ifndef STEPCOUNT_SYNTAX_H_
#define STEPCOUNT_SYNTAX_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "stepcount/value.h"

namespace stepcount {

enum class BinaryOp { kEq, kAdd, kSub, kMul, kFloorDiv, kLt, kLe, kGt, kGe };

// Concrete-syntax spelling of an operator: "==", "+", "//", ...
std::string_view OperatorName(BinaryOp op);
std::optional<BinaryOp> OperatorFromName(std::string_view name);

struct Expr;
struct Stmt;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// Expression forms. Variable names are canonical (upper-case) symbols.
struct VarExpr {
  std::string name;
};
struct LitExpr {
  Value value;
};
struct BinaryExpr {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct LenExpr {
  ExprPtr arg;
};
struct IndExpr {
  ExprPtr index;
  ExprPtr list;
};

struct Expr {
  std::variant<VarExpr, LitExpr, BinaryExpr, LenExpr, IndExpr> node;
};

// Statement forms. Seq is binary; `seqn` exists only in the concrete syntax.
struct SkipStmt {};
struct AssignStmt {
  std::string target;
  ExprPtr rhs;
};
struct ReturnStmt {
  ExprPtr rhs;
};
struct IfElseStmt {
  ExprPtr test;
  StmtPtr then_branch;
  StmtPtr else_branch;
};
struct WhileStmt {
  ExprPtr test;
  StmtPtr body;
};
struct SeqStmt {
  StmtPtr first;
  StmtPtr second;
};

struct Stmt {
  std::variant<SkipStmt, AssignStmt, ReturnStmt, IfElseStmt, WhileStmt, SeqStmt>
      node;
};

// Builders. Names are canonicalized.
ExprPtr Var(std::string_view name);
ExprPtr Lit(Value v);
ExprPtr Lit(long long v);
ExprPtr Binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr Len(ExprPtr arg);
ExprPtr Ind(ExprPtr index, ExprPtr list);

StmtPtr Skip();
StmtPtr Assign(std::string_view target, ExprPtr rhs);
StmtPtr Return(ExprPtr rhs);
StmtPtr IfElse(ExprPtr test, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr While(ExprPtr test, StmtPtr body);
StmtPtr Seq(StmtPtr first, StmtPtr second);
// Right-nested Seq: Seqn({a, b, c}) == Seq(a, Seq(b, c)). Requires a
// nonempty list.
StmtPtr Seqn(std::initializer_list<StmtPtr> stmts);

// Structural equality.
bool operator==(const Expr& a, const Expr& b);
bool operator==(const Stmt& a, const Stmt& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }
inline bool operator!=(const Stmt& a, const Stmt& b) { return !(a == b); }

}  // namespace stepcount

#endif  // STEPCOUNT_SYNTAX_H_
