#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fsn/term.hpp"

namespace fsn {

// Surface grammar.
//   types: p | _|_ | T -> T | T /\ T | T \/ T | forall p. T | exists p. T
//          (/\ binds tighter than \/, which binds tighter than ->; all three
//          associate to the right; quantifiers extend as far right as possible)
//   terms: x | fn x : T => M | M N | <M, N> | M.1 | M.2 | inl M : T | inr M : T
//          | case M of { x => S | y => T } | abort M : T | tfn p => M | M [T]
//          | pack <S, M> : T | unpack M as <p, x> in N
//   programs: (assume x : T ;)* M
// `#` starts a comment running to the end of the line.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Program {
  Context ctx;
  Term term;
};

Type parseType(std::string_view text);
Term parseTerm(std::string_view text);
Program parseProgram(std::string_view text);

std::string print(const Type& t);
std::string print(const Term& m);
std::string printContext(const Context& ctx);  // one `assume` line per variable
std::string printProgram(const Program& p);

bool isKeyword(std::string_view word);

}  // namespace fsn
