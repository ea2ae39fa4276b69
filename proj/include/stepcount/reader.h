#ifndef STEPCOUNT_READER_H_
#define STEPCOUNT_READER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stepcount/env.h"
#include "stepcount/syntax.h"
#include "stepcount/value.h"

namespace stepcount {

// Malformed concrete syntax. Positions are 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset, std::size_t line,
              std::size_t column);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// Parsers for the parenthesized concrete syntax. Each accepts exactly one
// form, with `;` line comments and dotted pairs as in Lisp, so
// `(lit . (0 1 2))` and `(lit 0 1 2)` read the same. `(seqn s1 ... sk)` is
// desugared to right-nested `seq`. All throw SyntaxError.
StmtPtr ParseStmt(std::string_view text);
ExprPtr ParseExpr(std::string_view text);
Value ParseValue(std::string_view text);
// An alist such as `((key . 4) (lst . (0 1 3)))`. Blank input, `nil` and
// `()` all give the empty environment.
VarEnv ParseEnv(std::string_view text);

enum class LetterCase { kLower, kUpper };

// Values print in Lisp style; the empty list prints as nil.
std::string FormatValue(const Value& v, LetterCase letter_case = LetterCase::kUpper);

// Program text in lower case on one line, e.g. "(<= (var low) (var high))".
// ParseExpr(PrintExpr(e)) is structurally equal to e.
std::string PrintExpr(const Expr& e);
std::string PrintStmt(const Stmt& s);

// Alist form as the Lisp printer shows it: `((LOW . 4) (LST 0 1 3))`.
std::string FormatEnv(const VarEnv& env);
// One binding: `(LOW . 4)`, `(LST 0 1 3)`, `(X)` for an empty list.
std::string FormatBinding(const VarEnv::Binding& binding);

}  // namespace stepcount

#endif  // STEPCOUNT_READER_H_
