#include "stepcount/value.h"

#include <algorithm>
#include <cctype>

namespace stepcount {

std::string CanonicalSymbol(std::string_view name) {
  std::string out(name);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

Value Value::Int(Integer v) {
  Value out;
  out.rep_.emplace<kIntIndex>(std::move(v));
  return out;
}

Value Value::Symbol(std::string_view name) {
  std::string canonical = CanonicalSymbol(name);
  if (canonical == "NIL") return Value();
  Value out;
  out.rep_.emplace<kSymIndex>(Sym{std::move(canonical)});
  return out;
}

Value Value::MakeList(List items) {
  Value out;
  if (!items.empty()) {
    out.rep_.emplace<kListIndex>(std::make_shared<const List>(std::move(items)));
  }
  return out;
}

const Value::List& Value::elements() const {
  static const List kEmpty;
  const auto& ptr = std::get<kListIndex>(rep_);
  return ptr ? *ptr : kEmpty;
}

bool operator==(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  switch (a.rep_.index()) {
    case Value::kIntIndex:
      return a.as_int() == b.as_int();
    case Value::kSymIndex:
      return a.symbol_name() == b.symbol_name();
    default: {
      const auto& pa = std::get<Value::kListIndex>(a.rep_);
      const auto& pb = std::get<Value::kListIndex>(b.rep_);
      if (pa == pb) return true;
      return a.elements() == b.elements();
    }
  }
}

}  // namespace stepcount
