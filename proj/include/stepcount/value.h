#ifndef STEPCOUNT_VALUE_H_
#define STEPCOUNT_VALUE_H_

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stepcount {

using Integer = boost::multiprecision::cpp_int;

// A runtime datum: an integer, a symbol, or a list of values.
//
// Symbols are case-insensitive and stored upper case. The symbol NIL and the
// empty list are the same value; Symbol("nil") yields the empty list. Lists
// share their storage, so copying a Value never copies list elements.
class Value {
 public:
  using List = std::vector<Value>;

  // The empty list (NIL).
  Value() = default;

  static Value Int(Integer v);
  static Value Symbol(std::string_view name);
  static Value MakeList(List items);
  static Value True() { return Symbol("T"); }
  static Value Bool(bool b) { return b ? True() : Value(); }

  bool is_int() const { return rep_.index() == kIntIndex; }
  bool is_symbol() const { return rep_.index() == kSymIndex; }
  bool is_list() const { return rep_.index() == kListIndex; }
  bool is_nil() const { return is_list() && elements().empty(); }

  // Everything except NIL counts as true in tests.
  bool truthy() const { return !is_nil(); }

  const Integer& as_int() const { return std::get<kIntIndex>(rep_); }
  const std::string& symbol_name() const { return std::get<kSymIndex>(rep_).name; }
  const List& elements() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  struct Sym {
    std::string name;
  };
  static constexpr std::size_t kListIndex = 0;
  static constexpr std::size_t kIntIndex = 1;
  static constexpr std::size_t kSymIndex = 2;

  // A null list pointer is the empty list.
  std::variant<std::shared_ptr<const List>, Integer, Sym> rep_;
};

// Upper-cases ASCII letters; symbol names are compared in this form.
std::string CanonicalSymbol(std::string_view name);

}  // namespace stepcount

#endif  // STEPCOUNT_VALUE_H_
