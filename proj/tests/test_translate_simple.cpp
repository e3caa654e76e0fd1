#include "common.hpp"
#include "fsn/translate_simple.hpp"
#include "fsn/witnesses.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("trType") {
  CHECK(print(trType(ty("p -> q -> p /\\ q"))) == "_|_ -> _|_ -> (_|_ -> _|_ -> _|_) -> _|_");
  CHECK(alphaEq(trType(Type::bot()), Type::bot()));
  CHECK(alphaEq(trType(ty("p \\/ q")), ty("(_|_ -> _|_) -> (_|_ -> _|_) -> _|_")));
  CHECK_THROWS_AS(trType(ty("forall p. p")), NotSimplyTyped);
}

TEST_CASE("spine") {
  CHECK(spine(Type::bot()).args.empty());
  auto one = spine(ty("_|_ -> _|_"));
  REQUIRE(one.args.size() == 1);
  CHECK(alphaEq(one.args[0], Type::bot()));
  auto hi = spine(ty("(_|_ -> _|_) -> _|_"));
  REQUIRE(hi.args.size() == 1);
  CHECK(alphaEq(hi.args[0], ty("_|_ -> _|_")));
  CHECK(alphaEq(fromSpine(hi), ty("(_|_ -> _|_) -> _|_")));
  CHECK_THROWS_AS(spine(ty("_|_ -> p")), NotTargetType);
}

TEST_CASE("trTerm") {
  Context ctx = ctxOf("assume x : p ; assume u : p ; assume v : q ;");
  CHECK(alphaEq(trTerm(ctx, trm("x")), trm("x")));
  CHECK(alphaEq(*trContext(ctx).lookup("x"), Type::bot()));
  CHECK(alphaEq(trTerm(ctx, trm("<u, v>")), trm("fn z : _|_ -> _|_ -> _|_ => z u v")));
  CHECK(alphaEq(trTerm(ctx, trm("<u, v>.1")),
                trm("(fn z : _|_ -> _|_ -> _|_ => z u v) (fn x : _|_ => fn y : _|_ => x)")));
  CHECK(alphaEq(trTerm(ctx, trm("fn w : p => w")), trm("fn w : _|_ => w")));
  CHECK_THROWS_AS(trTerm({}, trm("tfn p => fn x : p => x")), NotSimplyTyped);
}

TEST_CASE("translations are typed by translated types") {
  for (const Witness& w : witnesses()) {
    if (!inFragment(w.program.term, CalculusId::LambdaFull)) continue;
    bool simple = true;
    for (const auto& [x, t] : w.program.ctx.vars()) simple = simple && inFragment(t, CalculusId::LambdaFull);
    if (!simple) continue;
    CAPTURE(w.source);
    Term t = trTerm(w.program.ctx, w.program.term);
    CHECK(inFragment(t, CalculusId::LambdaArrow));
    CHECK(alphaEq(infer(trContext(w.program.ctx), t), trType(infer(w.program.ctx, w.program.term))));
  }
}

TEST_CASE("simulation") {
  Context ctx = ctxOf(
      "assume u : p ; assume v : q ; assume w : p \\/ q ; assume f : p -> s ; assume g : q -> p -> s ;"
      "assume n : p ;");
  auto pi = checkSimulationSimple(ctx, trm("<u, v>.1"), {{}, RuleId::BPi1});
  CHECK(pi.ok());
  CHECK(pi.reach.steps >= 1);
  CHECK(pi.reach.steps <= 3);

  auto arrow = checkSimulationSimple(ctx, trm("(fn x : p => x) u"), {{}, RuleId::BArrow});
  CHECK(arrow.ok());
  CHECK(arrow.reach.steps == 1);

  auto cc = checkSimulationSimple(ctx, trm("(case w of { x => fn y : p => f x | y => g y }) n"),
                                  {{}, RuleId::CCaseApp});
  CHECK(cc.ok());
  CHECK(cc.reach.steps == 1);
}

TEST_CASE("abort of abort translates to the same term") {
  Context ctx = ctxOf("assume a : _|_ ;");
  auto r = checkSimulationSimple(ctx, trm("abort (abort a : _|_) : p"), {{}, RuleId::CEpsEps});
  CHECK(r.reach.outcome == ReachOutcome::Identical);
  CHECK_FALSE(r.ok());
}
