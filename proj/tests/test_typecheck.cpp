#include "common.hpp"

using namespace fsn;
using namespace fsn::test;

namespace {

TypeErrorKind errorOf(const Context& ctx, const Term& m) {
  try {
    infer(ctx, m);
  } catch (const TypeError& e) {
    return e.kind();
  }
  FAIL("expected a type error");
  return TypeErrorKind::TypeMismatch;
}

}  // namespace

TEST_CASE("infer") {
  CHECK(alphaEq(infer({}, trm("fn x : p => x")), ty("p -> p")));
  CHECK(alphaEq(infer(ctxOf("assume w : s /\\ t ;"), trm("w.1")), ty("s")));
  CHECK(alphaEq(infer(ctxOf("assume a : _|_ ;"), trm("abort a : s -> t")), ty("s -> t")));
  CHECK(alphaEq(infer(ctxOf("assume w : p \\/ q ; assume f : p -> q ;"), trm("case w of { x => f x | y => y }")),
                ty("q")));
  CHECK(alphaEq(infer({}, trm("tfn p => fn x : p => x")), ty("forall q. q -> q")));
  CHECK(alphaEq(infer(ctxOf("assume f : forall p. p -> p ;"), trm("f [q -> q]")), ty("(q -> q) -> q -> q")));
  CHECK(alphaEq(infer(ctxOf("assume x : q -> q ;"), trm("pack <q, x> : exists r. r -> r")), ty("exists r. r -> r")));
  CHECK(alphaEq(infer(ctxOf("assume m : exists p. p /\\ q ;"), trm("unpack m as <t, x> in x.2")), ty("q")));
}

TEST_CASE("type errors") {
  CHECK(errorOf(ctxOf("assume m : exists p. p ;"), trm("unpack m as <p, x> in x")) ==
        TypeErrorKind::ExistentialEscape);
  CHECK(errorOf({}, trm("y")) == TypeErrorKind::UnboundVariable);
  CHECK(errorOf(ctxOf("assume x : p ;"), trm("x.1")) == TypeErrorKind::TypeMismatch);
  CHECK(errorOf(ctxOf("assume x : p ;"), trm("inl x : q \\/ p")) == TypeErrorKind::TypeMismatch);
  CHECK(errorOf(ctxOf("assume x : p ;"), trm("tfn p => x")) == TypeErrorKind::TypeVariableCapture);

  try {
    infer(ctxOf("assume x : p ;"), trm("fn y : q => <y, x.2>"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.path() == Path{0, 1});
  }
}

TEST_CASE("fragments") {
  CHECK(inFragment(trm("fn x : _|_ => x"), CalculusId::LambdaArrow));
  CHECK_FALSE(inFragment(trm("<x, y>"), CalculusId::LambdaArrow));
  CHECK(inFragment(trm("tfn p => fn x : p => x"), CalculusId::FArrow));
  CHECK_FALSE(inFragment(trm("tfn p => fn x : p => x"), CalculusId::LambdaFull));
  CHECK(inFragment(trm("case w of { x => abort x : p | y => y }"), CalculusId::LambdaFull));
  CHECK_FALSE(inFragment(trm("fn x : forall p. p => x"), CalculusId::LambdaFull));
}

TEST_CASE("contextAt") {
  Context ctx = ctxOf("assume w : p \\/ q ;");
  Term m = trm("case w of { x => fn y : q => x | y => fn z : p => y }");
  Context inner = contextAt(ctx, m, {2, 0});
  REQUIRE(inner.lookup("y"));
  CHECK(alphaEq(*inner.lookup("y"), ty("q")));
  CHECK(alphaEq(*inner.lookup("z"), ty("p")));
  CHECK_FALSE(inner.lookup("x"));
}
