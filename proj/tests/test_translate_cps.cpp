#include "common.hpp"
#include "fsn/translate_cps.hpp"
#include "fsn/witnesses.hpp"

using namespace fsn;
using namespace fsn::test;

namespace {

const Witness& witnessFor(RuleId r) { return witnesses()[ruleIndex(r)]; }

}  // namespace

TEST_CASE("starType and trfType") {
  CHECK(alphaEq(starType(ty("p")), ty("p")));
  CHECK(alphaEq(starType(Type::bot()), Type::bot()));
  CHECK(alphaEq(starType(ty("p /\\ q")), ty("(((p -> _|_) -> _|_) -> ((q -> _|_) -> _|_) -> _|_) -> _|_")));
  CHECK(alphaEq(trfType(ty("p")), ty("(p -> _|_) -> _|_")));
  CHECK(alphaEq(trfType(Type::bot()), ty("(_|_ -> _|_) -> _|_")));
  CHECK(alphaEq(trfType(ty("forall p. p")), ty("((forall p. (p -> _|_) -> _|_) -> _|_) -> _|_")));
  CHECK(alphaEq(starType(ty("exists p. p")), ty("(forall p. ((p -> _|_) -> _|_) -> _|_) -> _|_")));
}

TEST_CASE("diamond") {
  Context ctx = ctxOf("assume x : p ; assume n : q ; assume k : _|_ ;");
  Term k = Term::var("k");
  CHECK(alphaEq(diamond(ctx, trm("x"), k), trm("x k")));
  CHECK(alphaEq(diamond(ctx, trm("fn y : p => n"), k),
                trm("k (fn y : (p -> _|_) -> _|_ => fn k1 : q -> _|_ => n k1)")));
  CHECK(alphaEq(diamond(ctx, trm("pack <q, n> : exists p. p"), k),
                trm("k (fn u : forall p. ((p -> _|_) -> _|_) -> _|_ => u [q] (fn k1 : q -> _|_ => n k1))")));
}

TEST_CASE("at") {
  Context ctx = ctxOf("assume k : _|_ ;");
  Term k = Term::var("k");
  CHECK(alphaEq(at(ctx, ty("p"), EpsElim{ty("q")}, k), trm("fn m : _|_ => m")));
  CHECK(alphaEq(at(ctx, ty("p /\\ q"), Pi1Elim{}, k),
                trm("fn m : (((p -> _|_) -> _|_) -> ((q -> _|_) -> _|_) -> _|_) -> _|_ =>"
                   " m (fn a : (p -> _|_) -> _|_ => fn b : (q -> _|_) -> _|_ => a k)")));

  Type ex = ty("exists t. t /\\ q");
  Context branch = ctx;
  branch.bindTypeVar("t");
  branch.bind("x", ty("t /\\ q"));
  Term body = diamond(branch, trm("x.2"), k);
  Term expected = Term::lam("m", starType(ex),
                            Term::app(Term::var("m"), Term::tyLam("t", Term::lam("x", trfType(ty("t /\\ q")), body))));
  CHECK(alphaEq(at(ctx, ex, UnpackElim{"t", "x", trm("x.2")}, k), expected));
}

TEST_CASE("trfTerm") {
  Context ctx = ctxOf("assume x : p ; assume u : p ; assume v : q ; assume a : _|_ ;");
  CHECK(alphaEq(trfTerm(ctx, trm("x")), trm("fn k : p -> _|_ => x k")));
  CHECK(alphaEq(trfTerm(ctx, trm("<u, v>")),
                trm("fn k : ((((p -> _|_) -> _|_) -> ((q -> _|_) -> _|_) -> _|_) -> _|_) -> _|_ =>"
                   " k (fn z : ((p -> _|_) -> _|_) -> ((q -> _|_) -> _|_) -> _|_ =>"
                   " z (fn k1 : p -> _|_ => u k1) (fn k2 : q -> _|_ => v k2))")));
  CHECK(alphaEq(trfTerm(ctx, trm("abort a : p")), trm("fn k : p -> _|_ => a (fn m : _|_ => m)")));
  CHECK(alphaEq(*trfContext(ctx).lookup("x"), ty("(p -> _|_) -> _|_")));
}

TEST_CASE("CPS beta simulation") {
  const Witness& pack = witnessFor(RuleId::BUnpack);
  auto r = checkSimulationCpsBeta(pack.program.ctx, pack.program.term, {{}, RuleId::BUnpack});
  CHECK(r.ok());
  CHECK(r.reach.steps >= 1);
  CHECK(r.reach.steps <= 6);

  Context ctx = ctxOf("assume u : p ; assume v : q ;");
  auto arrow = checkSimulationCpsBeta(ctx, trm("(fn x : p => x) u"), {{}, RuleId::BArrow});
  CHECK(arrow.ok());
  // (λm. m (trf u) k)(λx. λk'. x k') needs four contractions to reach λk. u k.
  CHECK(arrow.reach.steps == 4);
  CHECK(checkSimulationCpsBeta(ctx, trm("<u, v>.2"), {{}, RuleId::BPi2}).ok());

  for (const Witness& w : witnesses()) {
    if (isCommutative(w.rule)) continue;
    CAPTURE(w.source);
    CHECK(checkSimulationCpsBeta(w.program.ctx, w.program.term, {{}, w.rule}).ok());
  }
}

TEST_CASE("commutations translate to equal terms") {
  for (RuleId rule : {RuleId::CUnpackUnpack, RuleId::CUnpackEps, RuleId::CEpsEps}) {
    const Witness& w = witnessFor(rule);
    CAPTURE(w.source);
    CHECK(checkCpsCommutative(w.program.ctx, w.program.term, {{}, rule}).equal);
  }
  Context ctx = ctxOf("assume x : _|_ ;");
  auto r = checkCpsCommutative(ctx, trm("abort (abort x : _|_) : s"), {{}, RuleId::CEpsEps});
  CHECK(alphaEq(r.after, trm("fn k : s -> _|_ => x (fn m : _|_ => m)")));
  CHECK(alphaEq(r.before, r.after));

  std::size_t equal = 0;
  for (const Witness& w : witnesses())
    if (isCommutative(w.rule)) equal += checkCpsCommutative(w.program.ctx, w.program.term, {{}, w.rule}).equal;
  CHECK(equal == 21);
}

TEST_CASE("substitution equations for a variable") {
  Context ctx = ctxOf("assume x : p ; assume y : p ; assume k : p -> _|_ ;");
  SubstInstance in{ctx,     trm("x"), trm("k"), EpsElim{ty("q")}, ty("_|_"), trm("k"), "x", trm("y"), "p",
                   ty("q"), ty("p -> p")};
  SubstReport r = checkSubstitutionLemmas(in);
  CHECK(r.all());
  // (x ◇ k)[x := trf y] is (trf y) k, which contracts to y k = y ◇ k.
  CHECK(r.holds[1]);
  CHECK_FALSE(r.exact[1]);
  CHECK(r.exact[3]);
}
