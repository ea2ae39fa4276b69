#include "stepcount/programs.h"

#include <utility>

namespace stepcount {
namespace {

ExprPtr Op(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  return Binary(op, std::move(lhs), std::move(rhs));
}

}  // namespace

StmtPtr BinarySearch(ExprPtr key, ExprPtr lst) {
  return Seqn({
      Assign("low", Lit(0)),
      Assign("high", Op(BinaryOp::kSub, Len(lst), Lit(1))),
      While(Op(BinaryOp::kLe, Var("low"), Var("high")),
            Seq(Assign("mid", Op(BinaryOp::kFloorDiv,
                                 Op(BinaryOp::kAdd, Var("low"), Var("high")), Lit(2))),
                IfElse(Op(BinaryOp::kEq, key, Ind(Var("mid"), lst)),
                       Return(Var("mid")),
                       IfElse(Op(BinaryOp::kLt, key, Ind(Var("mid"), lst)),
                              Assign("high", Op(BinaryOp::kSub, Var("mid"), Lit(1))),
                              Assign("low", Op(BinaryOp::kAdd, Var("mid"), Lit(1))))))),
      Return(Lit(-1)),
  });
}

StmtPtr BinarySearchAlt(ExprPtr key, ExprPtr lst) {
  return Seqn({
      Assign("low", Lit(0)),
      Assign("high", Op(BinaryOp::kSub, Len(lst), Lit(1))),
      While(Op(BinaryOp::kLe, Var("low"), Var("high")),
            Seq(Assign("mid", Op(BinaryOp::kFloorDiv,
                                 Op(BinaryOp::kAdd, Var("low"), Var("high")), Lit(2))),
                IfElse(Op(BinaryOp::kLt, key, Ind(Var("mid"), lst)),
                       Assign("high", Op(BinaryOp::kSub, Var("mid"), Lit(1))),
                       IfElse(Op(BinaryOp::kEq, key, Ind(Var("mid"), lst)),
                              Return(Var("mid")),
                              Assign("low", Op(BinaryOp::kAdd, Var("mid"), Lit(1))))))),
      Return(Lit(-1)),
  });
}

StmtPtr LinearSearch(ExprPtr key, ExprPtr lst) {
  return Seqn({
      Assign("i", Lit(0)),
      While(Op(BinaryOp::kLt, Var("i"), Len(lst)),
            Seq(IfElse(Op(BinaryOp::kEq, key, Ind(Var("i"), lst)),
                       Return(Var("i")),
                       Skip()),
                Assign("i", Op(BinaryOp::kAdd, Var("i"), Lit(1))))),
      Return(Lit(-1)),
  });
}

std::vector<Integer> EvenList(std::size_t n) {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(2 * i);
  return out;
}

Value IntegerList(std::span<const Integer> values) {
  Value::List items;
  items.reserve(values.size());
  for (const Integer& v : values) items.push_back(Value::Int(v));
  return Value::MakeList(std::move(items));
}

StmtPtr ProgramFamily::Program() const { return build(Var("key"), Var("lst")); }

ProgramFamily MakeFamily(std::string name,
                         std::function<StmtPtr(ExprPtr, ExprPtr)> build) {
  ProgramFamily family;
  family.name = std::move(name);
  family.build = std::move(build);
  family.list_builder = EvenList;
  family.input_builder = [](std::size_t n, const Value& probe) {
    return VarEnv{{"KEY", probe}, {"LST", IntegerList(EvenList(n))}};
  };
  return family;
}

std::span<const ProgramFamily> Families() {
  static const std::vector<ProgramFamily> kFamilies = {
      MakeFamily("binarysearch", BinarySearch),
      MakeFamily("binarysearch-alt", BinarySearchAlt),
      MakeFamily("linear-search", LinearSearch),
  };
  return kFamilies;
}

const ProgramFamily* FindFamily(std::string_view name) {
  for (const ProgramFamily& family : Families()) {
    if (family.name == name) return &family;
  }
  return nullptr;
}

}  // namespace stepcount
