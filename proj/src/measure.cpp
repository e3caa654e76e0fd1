#include "fsn/measure.hpp"

namespace fsn {

using K = Term::Kind;

MeasureValue chi(const Term& m) {
  switch (m.kind()) {
    case K::Var: return 1;
    case K::Lam:
    case K::Inj1:
    case K::Inj2:
    case K::TyLam:
    case K::Pack: return chi(m.child(0));
    case K::Pair: return chi(m.child(0)) + chi(m.child(1));
    case K::App: {
      MeasureValue f = chi(m.child(0));
      return f * f * chi(m.child(1));
    }
    case K::Proj1:
    case K::Proj2:
    case K::TyApp: {
      MeasureValue p = chi(m.child(0));
      return p * p;
    }
    case K::Case: {
      MeasureValue w = chi(m.child(0));
      return w * w * (chi(m.child(1)) + chi(m.child(2))) + 1;
    }
    case K::Unpack: {
      MeasureValue n = chi(m.child(0));
      return n * n * chi(m.child(1)) + 1;
    }
    case K::Eps: {
      MeasureValue a = chi(m.child(0));
      return a * a + 1;
    }
  }
  return 1;
}

Decrease checkDecrease(const Context& ctx, const Term& m, const ReductionStep& s) {
  if (!isCommutative(s.rule)) throw NotCommutative(std::string(ruleName(s.rule)) + " is not a commutative rule");
  Decrease d;
  d.before = chi(m);
  d.after = chi(step(ctx, m, s));
  d.strictlyDecreased = d.before > d.after;
  return d;
}

Decrease checkDecrease(const Term& m, const ReductionStep& s) { return checkDecrease(Context{}, m, s); }

}  // namespace fsn
