#include "common.hpp"
#include "fsn/ast_json.hpp"
#include "fsn/generator.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("parseType") {
  Type t = parseType("p -> q -> (p /\\ q)");
  CHECK(alphaEq(t, Type::arrow(Type::atom("p"), Type::arrow(Type::atom("q"), Type::conj(Type::atom("p"), Type::atom("q"))))));
  CHECK(alphaEq(parseType("p /\\ q \\/ s"), Type::disj(Type::conj(Type::atom("p"), Type::atom("q")), Type::atom("s"))));
  CHECK(alphaEq(parseType("p \\/ q \\/ s"), Type::disj(Type::atom("p"), Type::disj(Type::atom("q"), Type::atom("s")))));
  CHECK(alphaEq(parseType("forall p. p -> q"), Type::forall("p", Type::arrow(Type::atom("p"), Type::atom("q")))));
  CHECK(alphaEq(parseType("_|_"), Type::bot()));
}

TEST_CASE("parseTerm") {
  CHECK(alphaEq(parseTerm("fn x : p => x"), Term::lam("x", Type::atom("p"), Term::var("x"))));
  CHECK(alphaEq(parseTerm("f x y"), Term::app(Term::app(Term::var("f"), Term::var("x")), Term::var("y"))));
  CHECK(alphaEq(parseTerm("m.1.2"), Term::proj2(Term::proj1(Term::var("m")))));
  CHECK(alphaEq(parseTerm("f [p] x"),
                Term::app(Term::tyApp(Term::var("f"), Type::atom("p")), Term::var("x"))));
  CHECK(alphaEq(parseTerm("unpack m as <p, x> in x"), Term::unpack(Term::var("m"), "p", "x", Term::var("x"))));
  CHECK(alphaEq(parseTerm("pack <q, x> : exists p. p"),
                Term::pack(Type::atom("q"), Term::var("x"), Type::exists("p", Type::atom("p")))));
}

TEST_CASE("print is idempotent on printed text") {
  for (const char* text : {"case w of { x => x | y => y }", "fn x : p => x", "abort (abort a : _|_) : s",
                           "(fn x : p => x) y", "f (g x) y", "case w of { x => f | y => g } n",
                           "unpack m as <p, x> in x", "tfn p => fn x : p => x", "inl x : p \\/ q",
                           "(abort a : p /\\ q).1", "<fn x : p => x, y>"}) {
    CHECK(print(parseTerm(text)) == text);
  }
  CHECK(parseTerm("case w of { x => f | y => g } n").is(Term::Kind::App));
  CHECK(print(parseType("(p -> q) -> p /\\ (q \\/ s)")) == "(p -> q) -> p /\\ (q \\/ s)");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parseProgram("assume x : p ;\nfn y : q => (x");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 13);
  }
  CHECK_THROWS_AS(parseTerm("fn case : p => case"), SyntaxError);
  CHECK_THROWS_AS(parseType("p ->"), SyntaxError);
}

TEST_CASE("comments and programs") {
  Program p = parseProgram("# header\nassume a : _|_ ; # trailing\nabort a : p");
  REQUIRE(p.ctx.lookup("a"));
  CHECK(alphaEq(p.term, parseTerm("abort a : p")));
  Program again = parseProgram(printProgram(p));
  CHECK(alphaEq(again.term, p.term));
  CHECK(again.ctx.vars().size() == 1);
}

TEST_CASE("AST format") {
  Program p = parseProgram("assume c : exists r. r ; unpack c as <t, x> in pack <t, x> : exists s. s");
  nlohmann::json j = toJson(p);
  CHECK(j["term"]["tag"] == "Unpack");
  CHECK(j["term"]["typeVarBinder"] == "t");
  CHECK(j["term"]["termVarBinder"] == "x");
  CHECK(j["term"]["body"]["tag"] == "Pack");
  CHECK(j["context"]["termVars"][0]["name"] == "c");
  Program back = programFromJson(j);
  CHECK(alphaEq(back.term, p.term));
  CHECK(alphaEq(*back.ctx.lookup("c"), *p.ctx.lookup("c")));
  CHECK_THROWS_AS(termFromJson(nlohmann::json{{"tag", "Nope"}}), std::invalid_argument);
}

TEST_CASE("generated terms survive printing") {
  for (CalculusId c : {CalculusId::LambdaFull, CalculusId::FFull}) {
    GenConfig cfg;
    cfg.calculus = c;
    cfg.seed = 11;
    Generator g(cfg);
    for (int i = 0; i < 50; ++i) {
      Generated m = g.next();
      std::string text = print(m.term);
      CAPTURE(text);
      Term back = parseTerm(text);
      CHECK(alphaEq(back, m.term));
      CHECK(print(back) == text);
    }
  }
}
