#include "fsn/syntax.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace fsn {

using K = Term::Kind;
using TK = Type::Kind;

SyntaxError::SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

constexpr std::array<std::string_view, 14> kKeywords = {"forall", "exists", "fn",   "tfn",    "inl",
                                                        "inr",    "case",   "of",   "abort",  "pack",
                                                        "unpack", "as",     "in",   "assume"};

enum class Tok { Ident, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      std::size_t l = line_, c = col_;
      char ch = s_[i_];
      if (s_.substr(i_, 3) == "_|_") {
        advance(3);
        out.push_back({Tok::Sym, "_|_", l, c});
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '\''))
          ++j;
        out.push_back({Tok::Ident, std::string(s_.substr(i_, j - i_)), l, c});
        advance(j - i_);
      } else {
        static constexpr std::array<std::string_view, 17> syms = {
            "->", "=>", "/\\", "\\/", ".1", ".2", "(", ")", "<", ">", ",", ":", ";", "[", "]", "{", "}"};
        bool matched = false;
        for (auto sym : syms) {
          if (s_.substr(i_, sym.size()) == sym) {
            out.push_back({Tok::Sym, std::string(sym), l, c});
            advance(sym.size());
            matched = true;
            break;
          }
        }
        if (!matched) {
          if (ch == '.' || ch == '|') {
            out.push_back({Tok::Sym, std::string(1, ch), l, c});
            advance(1);
          } else {
            throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
          }
        }
      }
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i_) {
      if (s_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        advance(1);
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : toks_(Lexer(s).run()) {}

  Type type() {
    if (isWord("forall") || isWord("exists")) {
      bool all = peek().text == "forall";
      ++pos_;
      std::string p = ident();
      expect(".");
      Type body = type();
      return all ? Type::forall(p, body) : Type::exists(p, body);
    }
    Type left = orType();
    if (accept("->")) return Type::arrow(left, type());
    return left;
  }

  Term term() {
    if (accept("fn")) {
      std::string x = ident();
      expect(":");
      Type t = type();
      expect("=>");
      return Term::lam(x, t, term());
    }
    if (accept("tfn")) {
      std::string p = ident();
      expect("=>");
      return Term::tyLam(p, term());
    }
    if (isWord("inl") || isWord("inr")) {
      bool left = peek().text == "inl";
      ++pos_;
      Term m = app();
      expect(":");
      Type t = type();
      return left ? Term::inj1(m, t) : Term::inj2(m, t);
    }
    if (accept("abort")) {
      Term m = app();
      expect(":");
      return Term::eps(m, type());
    }
    if (accept("pack")) {
      expect("<");
      Type s = type();
      expect(",");
      Term m = term();
      expect(">");
      expect(":");
      return Term::pack(s, m, type());
    }
    if (accept("unpack")) {
      Term m = term();
      expect("as");
      expect("<");
      std::string p = ident();
      expect(",");
      std::string x = ident();
      expect(">");
      expect("in");
      return Term::unpack(m, p, x, term());
    }
    return app();
  }

  Program program() {
    Program prog{Context{}, Term::var("_")};
    while (isWord("assume")) {
      const Token& at = peek();
      ++pos_;
      std::string x = ident();
      expect(":");
      Type t = type();
      expect(";");
      if (prog.ctx.contains(x)) throw SyntaxError("duplicate declaration of '" + x + "'", at.line, at.col);
      prog.ctx.declare(x, t);
    }
    prog.term = term();
    end();
    return prog;
  }

  void end() {
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  Type orType() {
    Type l = andType();
    if (accept("\\/")) return Type::disj(l, orType());
    return l;
  }

  Type andType() {
    Type l = atomType();
    if (accept("/\\")) return Type::conj(l, andType());
    return l;
  }

  Type atomType() {
    if (accept("_|_")) return Type::bot();
    if (accept("(")) {
      Type t = type();
      expect(")");
      return t;
    }
    return Type::atom(ident());
  }

  bool startsAtom() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return !isKeyword(t.text) || t.text == "case";
    return t.kind == Tok::Sym && (t.text == "(" || t.text == "<");
  }

  Term app() {
    Term f = postfix();
    while (startsAtom()) f = Term::app(f, postfix());
    return f;
  }

  Term postfix() {
    Term m = atom();
    for (;;) {
      if (accept(".1")) m = Term::proj1(m);
      else if (accept(".2")) m = Term::proj2(m);
      else if (accept("[")) {
        Type t = type();
        expect("]");
        m = Term::tyApp(m, t);
      } else {
        return m;
      }
    }
  }

  Term atom() {
    if (accept("(")) {
      Term m = term();
      expect(")");
      return m;
    }
    if (accept("<")) {
      Term a = term();
      expect(",");
      Term b = term();
      expect(">");
      return Term::pair(a, b);
    }
    if (accept("case")) {
      Term m = term();
      expect("of");
      expect("{");
      std::string x = ident();
      expect("=>");
      Term s = term();
      expect("|");
      std::string y = ident();
      expect("=>");
      Term t = term();
      expect("}");
      return Term::caseOf(m, x, s, y, t);
    }
    if (peek().kind == Tok::Ident && !isKeyword(peek().text)) return Term::var(ident());
    fail(peek().kind == Tok::End ? "unexpected end of input" : "unexpected '" + peek().text + "'");
  }

  const Token& peek() const { return toks_[pos_]; }

  bool isWord(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  bool accept(std::string_view s) {
    if (peek().kind != Tok::End && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }

  std::string ident() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || isKeyword(t.text)) fail("expected identifier");
    ++pos_;
    return t.text;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().line, peek().col); }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Type precedence: 0 arrow/quantifier, 1 sum, 2 product, 3 atom.
void printType(const Type& t, int prec, std::string& out) {
  auto open = [&](bool paren) {
    if (paren) out += '(';
  };
  auto close = [&](bool paren) {
    if (paren) out += ')';
  };
  switch (t.kind()) {
    case TK::Atom: out += t.name(); return;
    case TK::Bot: out += "_|_"; return;
    case TK::Forall:
    case TK::Exists: {
      bool p = prec > 0;
      open(p);
      out += t.is(TK::Forall) ? "forall " : "exists ";
      out += t.name();
      out += ". ";
      printType(t.body(), 0, out);
      close(p);
      return;
    }
    case TK::Arrow: {
      bool p = prec > 0;
      open(p);
      printType(t.dom(), 1, out);
      out += " -> ";
      printType(t.cod(), 0, out);
      close(p);
      return;
    }
    case TK::Or: {
      bool p = prec > 1;
      open(p);
      printType(t.left(), 2, out);
      out += " \\/ ";
      printType(t.right(), 1, out);
      close(p);
      return;
    }
    case TK::And: {
      bool p = prec > 2;
      open(p);
      printType(t.left(), 3, out);
      out += " /\\ ";
      printType(t.right(), 2, out);
      close(p);
      return;
    }
  }
}

// Term levels: 0 anywhere, 1 application head or operand of inl/abort,
// 2 argument or postfix operand.
void printTerm(const Term& m, int level, std::string& out) {
  auto ty = [&](const Type& t) { printType(t, 0, out); };
  bool openForm = m.is(K::Lam) || m.is(K::TyLam) || m.is(K::Unpack) || m.is(K::Inj1) || m.is(K::Inj2) ||
                  m.is(K::Eps) || m.is(K::Pack);
  bool paren = (openForm && level >= 1) || (m.is(K::App) && level >= 2);
  if (paren) out += '(';
  switch (m.kind()) {
    case K::Var: out += m.name(); break;
    case K::Lam:
      out += "fn " + m.name() + " : ";
      ty(m.type());
      out += " => ";
      printTerm(m.child(0), 0, out);
      break;
    case K::App:
      printTerm(m.child(0), 1, out);
      out += ' ';
      printTerm(m.child(1), 2, out);
      break;
    case K::Pair:
      out += '<';
      printTerm(m.child(0), 0, out);
      out += ", ";
      printTerm(m.child(1), 0, out);
      out += '>';
      break;
    case K::Proj1:
    case K::Proj2:
      printTerm(m.child(0), 2, out);
      out += m.is(K::Proj1) ? ".1" : ".2";
      break;
    case K::Inj1:
    case K::Inj2:
    case K::Eps:
      out += m.is(K::Inj1) ? "inl " : m.is(K::Inj2) ? "inr " : "abort ";
      printTerm(m.child(0), 1, out);
      out += " : ";
      ty(m.type());
      break;
    case K::Case:
      out += "case ";
      printTerm(m.child(0), 0, out);
      out += " of { " + m.name() + " => ";
      printTerm(m.child(1), 0, out);
      out += " | " + m.name2() + " => ";
      printTerm(m.child(2), 0, out);
      out += " }";
      break;
    case K::TyLam:
      out += "tfn " + m.name() + " => ";
      printTerm(m.child(0), 0, out);
      break;
    case K::TyApp:
      printTerm(m.child(0), 2, out);
      out += " [";
      ty(m.type());
      out += ']';
      break;
    case K::Pack:
      out += "pack <";
      ty(m.type());
      out += ", ";
      printTerm(m.child(0), 0, out);
      out += "> : ";
      ty(m.type2());
      break;
    case K::Unpack:
      out += "unpack ";
      printTerm(m.child(0), 1, out);
      out += " as <" + m.name() + ", " + m.name2() + "> in ";
      printTerm(m.child(1), 0, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

bool isKeyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

Type parseType(std::string_view text) {
  Parser p(text);
  Type t = p.type();
  p.end();
  return t;
}

Term parseTerm(std::string_view text) {
  Parser p(text);
  Term m = p.term();
  p.end();
  return m;
}

Program parseProgram(std::string_view text) { return Parser(text).program(); }

std::string print(const Type& t) {
  std::string out;
  printType(t, 0, out);
  return out;
}

std::string print(const Term& m) {
  std::string out;
  printTerm(m, 0, out);
  return out;
}

std::string printContext(const Context& ctx) {
  std::string out;
  for (const auto& [x, t] : ctx.vars()) out += "assume " + x + " : " + print(t) + " ;\n";
  return out;
}

std::string printProgram(const Program& p) { return printContext(p.ctx) + print(p.term) + "\n"; }

}  // namespace fsn
