#pragma once

#include <doctest.h>

#include "fsn/syntax.hpp"
#include "fsn/typecheck.hpp"

namespace fsn::test {

inline Type ty(std::string_view s) { return parseType(s); }
inline Term trm(std::string_view s) { return parseTerm(s); }

// Context from `assume` lines.
inline Context ctxOf(std::string_view decls) { return parseProgram(std::string(decls) + " x_").ctx; }

}  // namespace fsn::test

namespace doctest {
template <>
struct StringMaker<fsn::Term> {
  static String convert(const fsn::Term& t) { return fsn::print(t).c_str(); }
};
template <>
struct StringMaker<fsn::Type> {
  static String convert(const fsn::Type& t) { return fsn::print(t).c_str(); }
};
}  // namespace doctest
