#ifndef STEPCOUNT_TESTS_TEST_SUPPORT_H_
#define STEPCOUNT_TESTS_TEST_SUPPORT_H_

// Random generators for property tests.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stepcount/env.h"
#include "stepcount/syntax.h"
#include "stepcount/value.h"

namespace stepcount::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Chance(int percent) { return Uniform(1, 100) <= percent; }

  template <class T>
  const T& Pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(Uniform(0, static_cast<int>(items.size()) - 1))];
  }

  Integer RandomInteger() {
    if (Chance(5)) {
      // Occasionally far outside 64-bit range.
      Integer big = 1;
      for (int i = 0; i < 4; ++i) big *= Integer(1000000007);
      return Chance(50) ? big : Integer(-big);
    }
    return Uniform(-20, 20);
  }

  std::string SymbolName() {
    static const std::vector<std::string> kNames = {
        "a", "foo", "t", "x-1", "key", "low", "result", "<=?", "a*b", "+x", "-", "//z", "q.r"};
    return Pick(kNames);
  }

  Value RandomValue(int depth) {
    int kind = Uniform(0, depth > 0 ? 2 : 1);
    if (kind == 0) return Value::Int(RandomInteger());
    if (kind == 1) return Chance(10) ? Value() : Value::Symbol(SymbolName());
    Value::List items;
    int size = Uniform(0, 4);
    for (int i = 0; i < size; ++i) items.push_back(RandomValue(depth - 1));
    return Value::MakeList(std::move(items));
  }

  std::string VarName() {
    static const std::vector<std::string> kVars = {"x", "y", "z", "lst", "s", "unbound"};
    return Pick(kVars);
  }

  ExprPtr RandomExpr(int depth) {
    int kind = Uniform(0, depth > 0 ? 5 : 1);
    switch (kind) {
      case 0:
        return Var(VarName());
      case 1:
        return Lit(Chance(80) ? Value::Int(Uniform(-5, 10)) : RandomValue(2));
      case 2:
      case 3: {
        auto op = static_cast<BinaryOp>(Uniform(0, 8));
        return Binary(op, RandomExpr(depth - 1), RandomExpr(depth - 1));
      }
      case 4:
        return Len(RandomExpr(depth - 1));
      default:
        return Ind(RandomExpr(depth - 1), RandomExpr(depth - 1));
    }
  }

  StmtPtr RandomStmt(int depth) {
    int kind = Uniform(0, depth > 0 ? 5 : 2);
    switch (kind) {
      case 0:
        return Skip();
      case 1:
        return Assign(Pick(std::vector<std::string>{"x", "y", "z", "w"}), RandomExpr(2));
      case 2:
        return Chance(30) ? Return(RandomExpr(2)) : Assign("x", RandomExpr(2));
      case 3:
        return IfElse(RandomExpr(2), RandomStmt(depth - 1), RandomStmt(depth - 1));
      case 4:
        return While(RandomExpr(2), RandomStmt(depth - 1));
      default:
        return Seq(RandomStmt(depth - 1), RandomStmt(depth - 1));
    }
  }

  // Bindings the random expressions mostly read.
  VarEnv RandomEnv() {
    Value::List lst;
    int size = Uniform(0, 6);
    for (int i = 0; i < size; ++i) lst.push_back(Value::Int(Uniform(-3, 10)));
    return VarEnv{{"X", Value::Int(Uniform(-5, 10))},
                  {"Y", Value::Int(Uniform(-5, 10))},
                  {"Z", Value::Int(Uniform(0, 3))},
                  {"LST", Value::MakeList(std::move(lst))},
                  {"S", Value::Symbol(SymbolName())}};
  }

 private:
  std::mt19937_64 rng_;
};

// Number of nodes in an expression tree.
inline std::uint64_t NodeCount(const Expr& e) {
  return std::visit(
      [](const auto& node) -> std::uint64_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BinaryExpr>) {
          return 1 + NodeCount(*node.lhs) + NodeCount(*node.rhs);
        } else if constexpr (std::is_same_v<T, LenExpr>) {
          return 1 + NodeCount(*node.arg);
        } else if constexpr (std::is_same_v<T, IndExpr>) {
          return 1 + NodeCount(*node.index) + NodeCount(*node.list);
        } else {
          return 1;
        }
      },
      e.node);
}

// Direct children of an expression node.
inline std::vector<ExprPtr> Children(const Expr& e) {
  return std::visit(
      [](const auto& node) -> std::vector<ExprPtr> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, BinaryExpr>) {
          return {node.lhs, node.rhs};
        } else if constexpr (std::is_same_v<T, LenExpr>) {
          return {node.arg};
        } else if constexpr (std::is_same_v<T, IndExpr>) {
          return {node.index, node.list};
        } else {
          return {};
        }
      },
      e.node);
}

inline Value Ints(std::initializer_list<long long> values) {
  Value::List items;
  for (long long v : values) items.push_back(Value::Int(v));
  return Value::MakeList(std::move(items));
}

}  // namespace stepcount::testing

#endif  // STEPCOUNT_TESTS_TEST_SUPPORT_H_
