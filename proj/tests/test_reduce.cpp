#include "common.hpp"
#include "fsn/reduce.hpp"
#include "fsn/witnesses.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("rule catalog") {
  CHECK(allRules().size() == kRuleCount);
  std::size_t commutative = 0;
  for (RuleId r : allRules()) {
    CHECK(parseRuleName(ruleName(r)) == r);
    commutative += isCommutative(r);
  }
  CHECK(commutative == kCommutativeRuleCount);
  CHECK(isCommutative(RuleId::CEpsEps));
  CHECK_FALSE(isCommutative(RuleId::BArrow));
  CHECK(isCommutative(RuleId::CUnpackUnpack));
  CHECK(std::string(ruleName(RuleId::CEpsApp)) == "C-EPS-APP");
  CHECK(std::string(ruleName(RuleId::BCaseInl)) == "B-CASE-INL");
}

TEST_CASE("redexes") {
  auto r = redexes(trm("(fn x : p => x) y"));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == ReductionStep{{}, RuleId::BArrow});
  CHECK(redexes(trm("x")).empty());
  auto e = redexes(trm("(abort a : s /\\ t).1"));
  REQUIRE(e.size() == 1);
  CHECK(e[0] == ReductionStep{{}, RuleId::CEpsPi1});

  // Preorder: the outer redex comes before the one inside it.
  auto nested = redexes(trm("(fn x : p => x) ((fn y : p => y) z)"));
  REQUIRE(nested.size() == 2);
  CHECK(nested[0].path == Path{});
  CHECK(nested[1].path == Path{1});
}

TEST_CASE("step") {
  CHECK(alphaEq(step(trm("<u, v>.1"), {{}, RuleId::BPi1}), trm("u")));
  CHECK(alphaEq(step(trm("(abort a : s -> t) n"), {{}, RuleId::CEpsApp}), trm("abort a : t")));
  CHECK(alphaEq(step(trm("(case w of { x => s | y => t }) n"), {{}, RuleId::CCaseApp}),
                trm("case w of { x => s n | y => t n }")));
  CHECK(alphaEq(step(trm("(unpack a as <p, x> in n) r"), {{}, RuleId::CUnpackApp}),
                trm("unpack a as <p, x> in n r")));
  // Branch binders are renamed away from the free variables of the eliminator.
  CHECK(alphaEq(step(trm("(case w of { x => s | y => t }) x"), {{}, RuleId::CCaseApp}),
                trm("case w of { x1 => s x | y => t x }")));
  CHECK(alphaEq(step(trm("unpack pack <q, c> : exists r. r -> r as <t, f> in f"), {{}, RuleId::BUnpack}),
                trm("c")));
  CHECK(alphaEq(step(trm("(tfn p => fn x : p => x) [q]"), {{}, RuleId::BTyApp}), trm("fn x : q => x")));
  CHECK_THROWS_AS(step(trm("<u, v>.1"), {{}, RuleId::BPi2}), InvalidStep);
  CHECK_THROWS_AS(step(trm("<u, v>.1"), {{0}, RuleId::BPi1}), InvalidStep);
}

TEST_CASE("commutation rebuilding an annotation needs a context") {
  Context ctx = ctxOf("assume a : _|_ ; assume f : p -> q ; assume g : p -> q ;");
  Term m = trm("case (abort a : p \\/ p) of { x => f x | y => g y }");
  CHECK(alphaEq(step(ctx, m, {{}, RuleId::CEpsCase}), trm("abort a : q")));
}

TEST_CASE("normalize") {
  auto n = normalize({}, trm("(fn x : p => x) y"), Strategy::LeftmostOutermost, 10);
  CHECK(alphaEq(n.term, trm("y")));
  CHECK(n.trace == std::vector<ReductionStep>{{{}, RuleId::BArrow}});

  for (Strategy s : {Strategy::LeftmostOutermost, Strategy::RightmostInnermost, Strategy::CommutationsFirst}) {
    auto e = normalize(ctxOf("assume a : _|_ ;"), trm("abort (abort a : _|_) : s"), s, 10);
    CHECK(alphaEq(e.term, trm("abort a : s")));
    CHECK(e.trace == std::vector<ReductionStep>{{{}, RuleId::CEpsEps}});

    auto c = normalize({}, trm("case inl u : p \\/ q of { x => x | y => y }"), s, 10);
    CHECK(alphaEq(c.term, trm("u")));
    CHECK(c.trace == std::vector<ReductionStep>{{{}, RuleId::BCaseInl}});
  }
}

TEST_CASE("strategies choose different redexes") {
  Term m = trm("(fn x : p => x) ((fn y : p => y) z)");
  auto lo = normalize({}, m, Strategy::LeftmostOutermost);
  auto ri = normalize({}, m, Strategy::RightmostInnermost);
  CHECK(lo.trace.front().path == Path{});
  CHECK(ri.trace.front().path == Path{1});
  CHECK(alphaEq(lo.term, ri.term));

  Term mixed = trm("(fn x : p => x) (abort (abort a : _|_) : p)");
  auto cf = normalize(ctxOf("assume a : _|_ ;"), mixed, Strategy::CommutationsFirst);
  CHECK(cf.trace.front().rule == RuleId::CEpsEps);
}

TEST_CASE("fuel") {
  Term m = trm("(fn x : p => x) ((fn y : p => y) z)");
  try {
    normalize({}, m, Strategy::LeftmostOutermost, 1);
    FAIL("expected FuelExhausted");
  } catch (const FuelExhausted& e) {
    CHECK(e.trace().size() == 1);
    CHECK(alphaEq(e.reached(), trm("(fn y : p => y) z")));
  }
  CHECK_NOTHROW(normalize({}, m, Strategy::LeftmostOutermost, 2));
  auto only = normalize({}, m, Strategy::LeftmostOutermost, 0, RedexFilter::CommutationsOnly);
  CHECK(only.trace.empty());
}

TEST_CASE("paths") {
  CHECK(pathToString({}) == "root");
  CHECK(pathToString({0, 2, 1}) == "0.2.1");
  CHECK(parsePath("root") == Path{});
  CHECK(parsePath("1.0") == Path{1, 0});
  CHECK_FALSE(parsePath("1.x"));
}

TEST_CASE("witnesses fire their rule exactly once at the root") {
  const auto& ws = witnesses();
  REQUIRE(ws.size() == kRuleCount);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const Witness& w = ws[i];
    CAPTURE(w.source);
    CHECK(w.rule == allRules()[i]);
    auto r = redexes(w.program.term);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == ReductionStep{{}, w.rule});
    CHECK(classify(w.program.term) == w.rule);
    Term after = step(w.program.ctx, w.program.term, r[0]);
    CHECK(alphaEq(infer(w.program.ctx, after), infer(w.program.ctx, w.program.term)));
  }
}

TEST_CASE("generic patterns agree with the catalog on the witnesses") {
  for (const Witness& w : witnesses()) {
    CAPTURE(w.source);
    auto viaPattern = contractByPattern(w.program.ctx, w.program.term);
    if (!isCommutative(w.rule)) {
      CHECK_FALSE(viaPattern);
      continue;
    }
    REQUIRE(viaPattern);
    CHECK(viaPattern->first == w.rule);
    CHECK(alphaEq(viaPattern->second, contract(w.program.ctx, w.program.term, w.rule)));
  }
}
