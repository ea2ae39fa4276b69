#include "stepcount/reader.h"

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <vector>

namespace stepcount {

SyntaxError::SyntaxError(const std::string& message, std::size_t offset,
                         std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

// A raw s-expression. Dotted tails are folded into `items` when they are
// lists, so only a non-NIL atom is ever left in `tail`.
struct Datum {
  enum class Kind { kInt, kSymbol, kList };

  Kind kind = Kind::kList;
  Integer integer;
  std::string symbol;  // canonical
  std::vector<Datum> items;
  std::shared_ptr<Datum> tail;
  std::size_t offset = 0;

  bool is_nil() const {
    return (kind == Kind::kList && items.empty() && !tail) ||
           (kind == Kind::kSymbol && symbol == "NIL");
  }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // Reads the single form in the text; anything after it is an error.
  Datum ReadSingle() {
    SkipBlank();
    if (pos_ >= text_.size()) Fail("expected a form, found end of input", pos_);
    Datum d = Read();
    SkipBlank();
    if (pos_ < text_.size()) Fail("unexpected text after the form", pos_);
    return d;
  }

  bool AtEndAfterBlank() {
    SkipBlank();
    return pos_ >= text_.size();
  }

  [[noreturn]] void Fail(const std::string& message, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(message, offset, line, column);
  }

 private:
  static bool IsDelimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
           c == ';';
  }

  void SkipBlank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  Datum Read() {
    SkipBlank();
    if (pos_ >= text_.size()) Fail("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') return ReadList();
    if (c == ')') Fail("unbalanced ')'", pos_);
    return ReadAtom();
  }

  Datum ReadList() {
    Datum list;
    list.kind = Datum::Kind::kList;
    list.offset = pos_;
    ++pos_;  // '('
    while (true) {
      SkipBlank();
      if (pos_ >= text_.size()) Fail("missing ')'", list.offset);
      if (text_[pos_] == ')') {
        ++pos_;
        return list;
      }
      if (IsDotToken()) {
        std::size_t dot = pos_;
        if (list.items.empty()) Fail("'.' with nothing before it", dot);
        ++pos_;
        Datum tail = Read();
        SkipBlank();
        if (pos_ >= text_.size() || text_[pos_] != ')') {
          Fail("expected ')' after dotted tail", pos_);
        }
        ++pos_;
        if (tail.kind == Datum::Kind::kList && !tail.tail) {
          for (auto& item : tail.items) list.items.push_back(std::move(item));
        } else if (tail.kind == Datum::Kind::kList) {
          for (auto& item : tail.items) list.items.push_back(std::move(item));
          list.tail = std::move(tail.tail);
        } else if (!tail.is_nil()) {
          list.tail = std::make_shared<Datum>(std::move(tail));
        }
        return list;
      }
      list.items.push_back(Read());
    }
  }

  bool IsDotToken() const {
    return text_[pos_] == '.' &&
           (pos_ + 1 >= text_.size() || IsDelimiter(text_[pos_ + 1]));
  }

  Datum ReadAtom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) {
      char c = text_[pos_];
      if (c == '\'' || c == '`' || c == ',' || c == '"' || c == '#' || c == '|' ||
          c == '\\') {
        Fail(std::string("unsupported character '") + c + "'", pos_);
      }
      if (static_cast<unsigned char>(c) >= 0x80 ||
          !std::isprint(static_cast<unsigned char>(c))) {
        Fail("unsupported character in symbol", pos_);
      }
      ++pos_;
    }
    std::string_view token = text_.substr(start, pos_ - start);
    Datum atom;
    atom.offset = start;

    std::size_t digits_from = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    bool starts_numeric =
        digits_from < token.size() &&
        (std::isdigit(static_cast<unsigned char>(token[digits_from])) ||
         (token[digits_from] == '.' && digits_from + 1 < token.size() &&
          std::isdigit(static_cast<unsigned char>(token[digits_from + 1]))));
    if (starts_numeric) {
      for (std::size_t i = digits_from; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) {
          Fail("only integer numerals are supported: '" + std::string(token) + "'",
               start);
        }
      }
      atom.kind = Datum::Kind::kInt;
      // Strip leading zeros; the Integer string constructor reads "07" as octal.
      std::string_view magnitude = token.substr(digits_from);
      while (magnitude.size() > 1 && magnitude.front() == '0') magnitude.remove_prefix(1);
      atom.integer = Integer(std::string(magnitude));
      if (token[0] == '-') atom.integer = -atom.integer;
      return atom;
    }
    atom.kind = Datum::Kind::kSymbol;
    atom.symbol = CanonicalSymbol(token);
    return atom;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Converter {
 public:
  explicit Converter(const Reader& reader) : reader_(reader) {}

  Value ToValue(const Datum& d) const {
    switch (d.kind) {
      case Datum::Kind::kInt:
        return Value::Int(d.integer);
      case Datum::Kind::kSymbol:
        return Value::Symbol(d.symbol);
      case Datum::Kind::kList:
        break;
    }
    if (d.tail) reader_.Fail("dotted pairs are not values", d.tail->offset);
    return RestAsValue(d, 0);
  }

  // The value written after the head of `(head . v)` / `(head v0 ... vk)`.
  Value RestAsValue(const Datum& d, std::size_t from) const {
    if (d.tail) {
      if (from != d.items.size()) {
        reader_.Fail("dotted pairs are not values", d.tail->offset);
      }
      return ToValue(*d.tail);
    }
    Value::List items;
    items.reserve(d.items.size() - from);
    for (std::size_t i = from; i < d.items.size(); ++i) {
      items.push_back(ToValue(d.items[i]));
    }
    return Value::MakeList(std::move(items));
  }

  ExprPtr ToExpr(const Datum& d) const {
    const std::string& head = Head(d, "expression");
    if (head == "VAR") {
      ExpectArity(d, 1, "var");
      return Var(VariableName(d.items[1]));
    }
    if (head == "LIT") {
      if (d.items.size() == 1 && !d.tail) {
        return Lit(Value());
      }
      return Lit(RestAsValue(d, 1));
    }
    NoTail(d);
    if (head == "LEN") {
      ExpectArity(d, 1, "len");
      return Len(ToExpr(d.items[1]));
    }
    if (head == "IND") {
      ExpectArity(d, 2, "ind");
      return Ind(ToExpr(d.items[1]), ToExpr(d.items[2]));
    }
    if (auto op = OperatorFromName(head)) {
      ExpectArity(d, 2, std::string(OperatorName(*op)));
      return Binary(*op, ToExpr(d.items[1]), ToExpr(d.items[2]));
    }
    reader_.Fail("unknown expression operator '" + head + "'", d.items[0].offset);
  }

  StmtPtr ToStmt(const Datum& d) const {
    const std::string& head = Head(d, "statement");
    NoTail(d);
    if (head == "SKIP") {
      ExpectArity(d, 0, "skip");
      return Skip();
    }
    if (head == "ASSIGN") {
      ExpectArity(d, 2, "assign");
      const Datum& target = d.items[1];
      bool is_var = target.kind == Datum::Kind::kList && !target.tail &&
                    target.items.size() == 2 &&
                    target.items[0].kind == Datum::Kind::kSymbol &&
                    target.items[0].symbol == "VAR";
      if (!is_var) reader_.Fail("assign target must be (var name)", target.offset);
      return Assign(VariableName(target.items[1]), ToExpr(d.items[2]));
    }
    if (head == "RETURN") {
      ExpectArity(d, 1, "return");
      return Return(ToExpr(d.items[1]));
    }
    if (head == "IF-ELSE") {
      ExpectArity(d, 3, "if-else");
      return IfElse(ToExpr(d.items[1]), ToStmt(d.items[2]), ToStmt(d.items[3]));
    }
    if (head == "WHILE") {
      ExpectArity(d, 2, "while");
      return While(ToExpr(d.items[1]), ToStmt(d.items[2]));
    }
    if (head == "SEQ") {
      ExpectArity(d, 2, "seq");
      return Seq(ToStmt(d.items[1]), ToStmt(d.items[2]));
    }
    if (head == "SEQN") {
      if (d.items.size() < 2) {
        reader_.Fail("seqn needs at least one statement", d.offset);
      }
      StmtPtr out = ToStmt(d.items.back());
      for (std::size_t i = d.items.size() - 1; i-- > 1;) {
        out = Seq(ToStmt(d.items[i]), std::move(out));
      }
      return out;
    }
    reader_.Fail("unknown statement '" + head + "'", d.items[0].offset);
  }

  VarEnv ToEnv(const Datum& d) const {
    if (d.is_nil()) return VarEnv();
    if (d.kind != Datum::Kind::kList) {
      reader_.Fail("expected an alist of (name . value) pairs", d.offset);
    }
    NoTail(d);
    std::vector<VarEnv::Binding> bindings;
    for (const Datum& pair : d.items) {
      if (pair.kind != Datum::Kind::kList || pair.items.empty()) {
        reader_.Fail("expected a (name . value) pair", pair.offset);
      }
      std::string name = VariableName(pair.items[0]);
      bindings.emplace_back(std::move(name), RestAsValue(pair, 1));
    }
    return VarEnv::FromBindings(std::move(bindings));
  }

 private:
  const std::string& Head(const Datum& d, const char* what) const {
    if (d.kind != Datum::Kind::kList || d.items.empty()) {
      reader_.Fail(std::string("expected a parenthesized ") + what, d.offset);
    }
    if (d.items[0].kind != Datum::Kind::kSymbol) {
      reader_.Fail(std::string(what) + " must start with an operator", d.items[0].offset);
    }
    return d.items[0].symbol;
  }

  void NoTail(const Datum& d) const {
    if (d.tail) reader_.Fail("unexpected dotted pair", d.tail->offset);
  }

  void ExpectArity(const Datum& d, std::size_t arity, const std::string& op) const {
    if (d.tail) reader_.Fail("unexpected dotted pair", d.tail->offset);
    if (d.items.size() != arity + 1) {
      reader_.Fail(op + " takes " + std::to_string(arity) + " argument" +
                       (arity == 1 ? "" : "s") + ", got " +
                       std::to_string(d.items.size() - 1),
                   d.offset);
    }
  }

  std::string VariableName(const Datum& d) const {
    if (d.kind != Datum::Kind::kSymbol || d.symbol == "NIL") {
      reader_.Fail("expected a variable name", d.offset);
    }
    return d.symbol;
  }

  const Reader& reader_;
};

std::string Cased(const std::string& name, LetterCase letter_case) {
  if (letter_case == LetterCase::kUpper) return name;
  std::string out = name;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void AppendValue(std::ostringstream& out, const Value& v, LetterCase letter_case) {
  if (v.is_int()) {
    out << v.as_int();
  } else if (v.is_symbol()) {
    out << Cased(v.symbol_name(), letter_case);
  } else if (v.is_nil()) {
    out << (letter_case == LetterCase::kUpper ? "NIL" : "nil");
  } else {
    out << '(';
    bool first = true;
    for (const Value& item : v.elements()) {
      if (!first) out << ' ';
      first = false;
      AppendValue(out, item, letter_case);
    }
    out << ')';
  }
}

void AppendExpr(std::ostringstream& out, const Expr& e) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, VarExpr>) {
          out << "(var " << Cased(node.name, LetterCase::kLower) << ')';
        } else if constexpr (std::is_same_v<T, LitExpr>) {
          out << "(lit . ";
          AppendValue(out, node.value, LetterCase::kLower);
          out << ')';
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          out << '(' << OperatorName(node.op) << ' ';
          AppendExpr(out, *node.lhs);
          out << ' ';
          AppendExpr(out, *node.rhs);
          out << ')';
        } else if constexpr (std::is_same_v<T, LenExpr>) {
          out << "(len ";
          AppendExpr(out, *node.arg);
          out << ')';
        } else {
          out << "(ind ";
          AppendExpr(out, *node.index);
          out << ' ';
          AppendExpr(out, *node.list);
          out << ')';
        }
      },
      e.node);
}

void AppendStmt(std::ostringstream& out, const Stmt& s) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, SkipStmt>) {
          out << "(skip)";
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          out << "(assign (var " << Cased(node.target, LetterCase::kLower) << ") ";
          AppendExpr(out, *node.rhs);
          out << ')';
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          out << "(return ";
          AppendExpr(out, *node.rhs);
          out << ')';
        } else if constexpr (std::is_same_v<T, IfElseStmt>) {
          out << "(if-else ";
          AppendExpr(out, *node.test);
          out << ' ';
          AppendStmt(out, *node.then_branch);
          out << ' ';
          AppendStmt(out, *node.else_branch);
          out << ')';
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          out << "(while ";
          AppendExpr(out, *node.test);
          out << ' ';
          AppendStmt(out, *node.body);
          out << ')';
        } else {
          out << "(seq ";
          AppendStmt(out, *node.first);
          out << ' ';
          AppendStmt(out, *node.second);
          out << ')';
        }
      },
      s.node);
}

}  // namespace

StmtPtr ParseStmt(std::string_view text) {
  Reader reader(text);
  Datum d = reader.ReadSingle();
  return Converter(reader).ToStmt(d);
}

ExprPtr ParseExpr(std::string_view text) {
  Reader reader(text);
  Datum d = reader.ReadSingle();
  return Converter(reader).ToExpr(d);
}

Value ParseValue(std::string_view text) {
  Reader reader(text);
  Datum d = reader.ReadSingle();
  return Converter(reader).ToValue(d);
}

VarEnv ParseEnv(std::string_view text) {
  Reader reader(text);
  if (reader.AtEndAfterBlank()) return VarEnv();
  Datum d = reader.ReadSingle();
  return Converter(reader).ToEnv(d);
}

std::string FormatValue(const Value& v, LetterCase letter_case) {
  std::ostringstream out;
  AppendValue(out, v, letter_case);
  return out.str();
}

std::string PrintExpr(const Expr& e) {
  std::ostringstream out;
  AppendExpr(out, e);
  return out.str();
}

std::string PrintStmt(const Stmt& s) {
  std::ostringstream out;
  AppendStmt(out, s);
  return out.str();
}

std::string FormatBinding(const VarEnv::Binding& binding) {
  const auto& [name, value] = binding;
  std::ostringstream out;
  out << '(' << name;
  if (value.is_list()) {
    for (const Value& item : value.elements()) {
      out << ' ';
      AppendValue(out, item, LetterCase::kUpper);
    }
  } else {
    out << " . ";
    AppendValue(out, value, LetterCase::kUpper);
  }
  out << ')';
  return out.str();
}

std::string FormatEnv(const VarEnv& env) {
  if (env.empty()) return "NIL";
  std::string out = "(";
  bool first = true;
  for (const auto& binding : env.bindings()) {
    if (!first) out += ' ';
    first = false;
    out += FormatBinding(binding);
  }
  out += ')';
  return out;
}

}  // namespace stepcount
