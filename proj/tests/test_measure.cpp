#include "common.hpp"
#include "fsn/measure.hpp"
#include "fsn/witnesses.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("chi") {
  CHECK(chi(trm("x")) == 1);
  CHECK(chi(trm("abort x : s")) == 2);
  CHECK(chi(trm("abort (abort x : _|_) : s")) == 5);
  CHECK(chi(trm("case w of { x => s | y => t }")) == 3);
  CHECK(chi(trm("<u, v>")) == 2);
  CHECK(chi(trm("fn x : p => x")) == 1);
}

TEST_CASE("chi grows beyond machine words") {
  std::string text = "x";
  for (int i = 0; i < 8; ++i) text = "abort (" + text + ") : _|_";
  // χ(ε^n x) = χ(ε^(n-1) x)² + 1, starting from 1.
  MeasureValue expected = 1;
  for (int i = 0; i < 8; ++i) expected = expected * expected + 1;
  CHECK(chi(trm(text)) == expected);
  CHECK(expected > MeasureValue(1) << 64);
}

TEST_CASE("checkDecrease") {
  Decrease a = checkDecrease(trm("abort (abort x : _|_) : s"), {{}, RuleId::CEpsEps});
  CHECK(a.before == 5);
  CHECK(a.after == 2);
  CHECK(a.strictlyDecreased);

  Decrease b = checkDecrease(trm("(case w of { x => s | y => t }) n"), {{}, RuleId::CCaseApp});
  CHECK(b.before == 9);
  CHECK(b.after == 3);
  CHECK(b.strictlyDecreased);

  Decrease c = checkDecrease(trm("(unpack a as <p, x> in n) r"), {{}, RuleId::CUnpackApp});
  CHECK(c.before == 4);
  CHECK(c.after == 2);
  CHECK(c.strictlyDecreased);

  CHECK_THROWS_AS(checkDecrease(trm("(fn x : p => x) y"), {{}, RuleId::BArrow}), NotCommutative);
}

TEST_CASE("every commutative witness strictly decreases chi") {
  std::size_t strict = 0;
  for (const Witness& w : witnesses()) {
    if (!isCommutative(w.rule)) continue;
    CAPTURE(w.source);
    Decrease d = checkDecrease(w.program.ctx, w.program.term, {{}, w.rule});
    CHECK(d.strictlyDecreased);
    strict += d.strictlyDecreased;
  }
  CHECK(strict == 21);
}
