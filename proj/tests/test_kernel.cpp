#include "common.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("substTerm") {
  CHECK(alphaEq(substTerm(Term::var("x"), "x", Term::var("y")), Term::var("y")));

  Term r = substTerm(trm("fn y : p => x"), "x", Term::var("y"));
  REQUIRE(r.is(Term::Kind::Lam));
  CHECK(r.name() != "y");
  CHECK(r.child(0).name() == "y");
  CHECK(alphaEq(r, trm("fn y1 : p => y")));

  CHECK(alphaEq(substTerm(trm("<x, z>"), "x", trm("fn w : p => w")), trm("<fn w : p => w, z>")));
}

TEST_CASE("substTypeInTerm") {
  CHECK(alphaEq(substTypeInTerm(trm("fn x : p => x"), "p", ty("q -> q")), trm("fn x : q -> q => x")));
  Term poly = trm("tfn p => fn x : p => x");
  CHECK(alphaEq(substTypeInTerm(poly, "p", ty("q")), poly));
  CHECK(alphaEq(substTypeInTerm(trm("pack <p, x> : exists r. r /\\ p"), "p", Type::bot()),
                trm("pack <_|_, x> : exists r. r /\\ _|_")));
  // Capture of a free type variable by a type abstraction is avoided.
  Term captured = substTypeInTerm(trm("tfn r => fn x : p => x"), "p", ty("r"));
  CHECK(alphaEq(captured, trm("tfn s => fn x : r => x")));
}

TEST_CASE("substType") {
  CHECK(alphaEq(substType(ty("p"), "p", Type::bot()), Type::bot()));
  CHECK(alphaEq(substType(ty("forall p. p"), "p", ty("q")), ty("forall p. p")));
  CHECK(alphaEq(substType(ty("p \\/ q"), "p", ty("s /\\ t")), ty("(s /\\ t) \\/ q")));
  CHECK(alphaEq(substType(ty("forall q. p -> q"), "p", ty("q")), ty("forall r. q -> r")));
}

TEST_CASE("alphaEq") {
  CHECK(alphaEq(trm("fn x : p => x"), trm("fn y : p => y")));
  CHECK_FALSE(alphaEq(trm("fn x : p => x"), trm("fn x : q => x")));
  CHECK(alphaEq(trm("tfn p => fn x : p => x"), trm("tfn q => fn x : q => x")));
  CHECK_FALSE(alphaEq(trm("fn x : p => y"), trm("fn y : p => y")));
  CHECK(alphaEq(trm("case w of { x => x | y => y }"), trm("case w of { a => a | b => b }")));
  CHECK(alphaEq(trm("unpack m as <p, x> in x"), trm("unpack m as <q, y> in y")));
  CHECK(alphaHash(trm("fn x : p => x")) == alphaHash(trm("fn y : p => y")));
}

TEST_CASE("applyEliminator and decompose") {
  Term m = Term::var("m");
  CHECK(alphaEq(applyEliminator(m, Pi1Elim{}), Term::proj1(m)));
  CHECK(alphaEq(applyEliminator(m, ArgElim{Term::var("n")}), Term::app(m, Term::var("n"))));
  CHECK(alphaEq(applyEliminator(m, EpsElim{ty("s")}), Term::eps(m, ty("s"))));
  auto d = decompose(trm("case w of { x => x | y => y }"));
  REQUIRE(d);
  CHECK(alphaEq(d->first, Term::var("w")));
  CHECK(std::holds_alternative<BranchesElim>(d->second));
  CHECK_FALSE(decompose(trm("fn x : p => x")));
}

TEST_CASE("free variables, size, paths") {
  Term m = trm("fn x : p => x y (tfn q => z)");
  CHECK(freeVars(m) == NameSet{"y", "z"});
  CHECK(freeTypeVars(trm("tfn q => fn x : q -> p => x")) == NameSet{"p"});
  CHECK(size(m) == 7);
  CHECK(alphaEq(subtermAt(m, {0, 1}), trm("tfn q => z")));
  CHECK(alphaEq(replaceAt(m, {0, 0, 1}, Term::var("w")), trm("fn x : p => x w (tfn q => z)")));
}

TEST_CASE("renameApart") {
  Term m = trm("(fn x : p => x) (fn x : p => fn y : p => y x)");
  Term r = renameApart(m, {"y"});
  CHECK(alphaEq(r, m));
  NameSet binders;
  std::vector<std::string> seen;
  std::vector<const Term*> stack{&r};
  while (!stack.empty()) {
    const Term* t = stack.back();
    stack.pop_back();
    if (t->is(Term::Kind::Lam)) seen.push_back(t->name());
    for (std::size_t i = 0; i < t->arity(); ++i) stack.push_back(&t->child(i));
  }
  for (const auto& b : seen) {
    CHECK(b != "y");
    CHECK(binders.insert(b).second);
  }
}
