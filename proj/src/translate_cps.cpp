#include "fsn/translate_cps.hpp"

#include "fsn/typecheck.hpp"

namespace fsn {

using K = Term::Kind;
using TK = Type::Kind;

namespace {

Type negate(const Type& t) { return Type::arrow(t, Type::bot()); }

}  // namespace

Type starType(const Type& t) {
  switch (t.kind()) {
    case TK::Atom:
    case TK::Bot: return t;
    case TK::Arrow: return Type::arrow(trfType(t.dom()), trfType(t.cod()));
    case TK::And: return negate(Type::arrow(trfType(t.left()), negate(trfType(t.right()))));
    case TK::Or: return Type::arrow(negate(trfType(t.left())), negate(negate(trfType(t.right()))));
    case TK::Forall: return Type::forall(t.name(), trfType(t.body()));
    case TK::Exists: return negate(Type::forall(t.name(), negate(trfType(t.body()))));
  }
  return t;
}

Type trfType(const Type& t) { return negate(negate(starType(t))); }

namespace {

class CpsTranslator {
 public:
  CpsTranslator(const Context& ctx, NameSet used) : env_(ctx), used_(std::move(used)) {}

  Term trf(const Term& m) {
    Type t = infer(env_, m);
    std::string k = fresh("k");
    return Term::lam(k, negate(starType(t)), diamond(m, Term::var(k)));
  }

  Term diamond(const Term& m, const Term& k) {
    switch (m.kind()) {
      case K::Var: return Term::app(m, k);
      case K::Lam: {
        env_.bind(m.name(), m.type());
        Term body = trf(m.child(0));
        env_.unbind();
        return Term::app(k, Term::lam(m.name(), trfType(m.type()), body));
      }
      case K::Pair: {
        Type t1 = trfType(infer(env_, m.child(0)));
        Type t2 = trfType(infer(env_, m.child(1)));
        std::string z = fresh("z");
        Term body = Term::app(Term::app(Term::var(z), trf(m.child(0))), trf(m.child(1)));
        return Term::app(k, Term::lam(z, Type::arrow(t1, negate(t2)), body));
      }
      case K::Inj1:
      case K::Inj2: {
        const Type& sum = m.type();
        if (!sum.is(TK::Or)) throw TypeError(TypeErrorKind::IllFormedAnnotation, {}, "injection annotation");
        std::string a = fresh("a");
        std::string b = fresh("b");
        Term body = Term::app(Term::var(m.is(K::Inj1) ? a : b), trf(m.child(0)));
        return Term::app(k, Term::lam(a, negate(trfType(sum.left())),
                                      Term::lam(b, negate(trfType(sum.right())), body)));
      }
      case K::TyLam: {
        Context saved = env_;
        env_.bindTypeVar(m.name());
        Term body = trf(m.child(0));
        env_ = std::move(saved);
        return Term::app(k, Term::tyLam(m.name(), body));
      }
      case K::Pack: {
        const Type& ex = m.type2();
        if (!ex.is(TK::Exists)) throw TypeError(TypeErrorKind::IllFormedAnnotation, {}, "pack annotation");
        std::string u = fresh("u");
        Type uType = Type::forall(ex.name(), negate(trfType(ex.body())));
        Term body = Term::app(Term::tyApp(Term::var(u), starType(m.type())), trf(m.child(0)));
        return Term::app(k, Term::lam(u, uType, body));
      }
      default: {
        auto d = decompose(m);
        Type scrut = infer(env_, d->first);
        return diamond(d->first, at(scrut, d->second, k));
      }
    }
  }

  Term at(const Type& scrut, const Eliminator& e, const Term& k) {
    std::string mv = fresh("m");
    Term m = Term::var(mv);
    auto abs = [&](Term body) { return Term::lam(mv, starType(scrut), std::move(body)); };
    if (auto* a = std::get_if<ArgElim>(&e)) return abs(Term::app(Term::app(m, trf(a->arg)), k));
    if (std::holds_alternative<Pi1Elim>(e) || std::holds_alternative<Pi2Elim>(e)) {
      if (!scrut.is(TK::And)) throw TypeError(TypeErrorKind::TypeMismatch, {}, "projection from a non-product");
      std::string a = fresh("a");
      std::string b = fresh("b");
      Term sel = Term::app(Term::var(std::holds_alternative<Pi1Elim>(e) ? a : b), k);
      return abs(Term::app(m, Term::lam(a, trfType(scrut.left()), Term::lam(b, trfType(scrut.right()), sel))));
    }
    if (auto* br = std::get_if<BranchesElim>(&e)) {
      if (!scrut.is(TK::Or)) throw TypeError(TypeErrorKind::TypeMismatch, {}, "case on a non-sum");
      env_.bind(br->x, scrut.left());
      Term left = Term::lam(br->x, trfType(scrut.left()), diamond(br->left, k));
      env_.unbind();
      env_.bind(br->y, scrut.right());
      Term right = Term::lam(br->y, trfType(scrut.right()), diamond(br->right, k));
      env_.unbind();
      return abs(Term::app(Term::app(m, left), right));
    }
    if (auto* ta = std::get_if<TyArgElim>(&e)) return abs(Term::app(Term::tyApp(m, starType(ta->arg)), k));
    if (auto* u = std::get_if<UnpackElim>(&e)) {
      if (!scrut.is(TK::Exists)) throw TypeError(TypeErrorKind::TypeMismatch, {}, "unpack of a non-existential");
      Type opened = substType(scrut.body(), scrut.name(), Type::atom(u->typeVar));
      Context saved = env_;
      env_.bindTypeVar(u->typeVar);
      env_.bind(u->termVar, opened);
      Term body = Term::lam(u->termVar, trfType(opened), diamond(u->body, k));
      env_ = std::move(saved);
      return abs(Term::app(m, Term::tyLam(u->typeVar, body)));
    }
    return Term::lam(mv, Type::bot(), m);
  }

 private:
  std::string fresh(const std::string& base) {
    std::string n = freshName(base, used_);
    used_.insert(n);
    return n;
  }

  Context env_;
  NameSet used_;
};

NameSet namesOf(const Context& ctx, std::initializer_list<const Term*> terms) {
  NameSet used = ctx.allNames();
  for (const Term* t : terms) collectAllNames(*t, used);
  return used;
}

}  // namespace

Term diamond(const Context& ctx, const Term& m, const Term& k) {
  NameSet avoid = namesOf(ctx, {&k});
  Term r = renameApart(m, avoid);
  CpsTranslator t(ctx, namesOf(ctx, {&k, &r}));
  return t.diamond(r, k);
}

Term at(const Context& ctx, const Type& scrutType, const Eliminator& e, const Term& k) {
  NameSet avoid = namesOf(ctx, {&k});
  collectAllNames(scrutType, avoid);
  Term hole = Term::var(freshName("hole", avoid));
  avoid.insert(hole.name());
  Term renamed = renameApart(applyEliminator(hole, e), avoid);
  Eliminator re = decompose(renamed)->second;
  CpsTranslator t(ctx, namesOf(ctx, {&k, &renamed}));
  return t.at(scrutType, re, k);
}

Term trfTerm(const Context& ctx, const Term& m) {
  Term r = renameApart(m, ctx.allNames());
  CpsTranslator t(ctx, namesOf(ctx, {&r}));
  return t.trf(r);
}

Context trfContext(const Context& ctx) {
  Context out;
  for (const auto& p : ctx.typeVars()) out.bindTypeVar(p);
  for (const auto& [x, t] : ctx.vars()) out.bind(x, trfType(t));
  return out;
}

SimulationResult checkSimulationCpsBeta(const Context& ctx, const Term& m, const ReductionStep& s,
                                        std::optional<std::size_t> depthCap, std::size_t stateBudget) {
  Term after = step(ctx, m, s);
  SimulationResult r{{}, trfTerm(ctx, m), trfTerm(ctx, after)};
  SearchLimits lim{depthCap.value_or(defaultDepthCap(r.before)), stateBudget};
  r.reach = reachableFocused(r.before, r.after, TargetRules{.eta = false}, lim);
  return r;
}

CommutationResult checkCpsCommutative(const Context& ctx, const Term& m, const ReductionStep& s) {
  CommutationResult r{trfTerm(ctx, m), trfTerm(ctx, step(ctx, m, s)), false};
  r.equal = alphaEq(r.before, r.after);
  return r;
}

bool SubstReport::all() const {
  for (bool b : holds)
    if (!b) return false;
  return true;
}

namespace {

// Contracts every application whose head is α-equal to `head`, innermost
// first, until none remains.
Term contractHeaded(const Term& m, const Term& head) {
  Term t = m;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    Term c = contractHeaded(m.child(i), head);
    if (!c.sameNode(m.child(i))) t = t.withChild(i, c);
  }
  if (t.is(K::App) && t.child(0).is(K::Lam) && alphaEq(t.child(0), head)) {
    const Term& f = t.child(0);
    return contractHeaded(substTerm(f.child(0), f.name(), t.child(1)), head);
  }
  return t;
}

Eliminator substElim(const Eliminator& e, const std::string& x, const Term& n) {
  Term hole = Term::var("_");
  NameSet fv = freeVars(n);
  NameSet names;
  collectAllNames(applyEliminator(hole, e), names);
  names.insert(fv.begin(), fv.end());
  hole = Term::var(freshName("hole", names));
  return decompose(substTerm(applyEliminator(hole, e), x, n))->second;
}

Eliminator substElimType(const Eliminator& e, const std::string& p, const Type& s) {
  NameSet names;
  collectAllNames(applyEliminator(Term::var("_"), e), names);
  Term hole = Term::var(freshName("hole", names));
  return decompose(substTypeInTerm(applyEliminator(hole, e), p, s))->second;
}

}  // namespace

SubstReport checkSubstitutionLemmas(const SubstInstance& in) {
  SubstReport rep;
  Term trfN = trfTerm(in.ctx, in.n);
  Type rhoStar = starType(in.rho);

  Context without;  // ctx with x removed, for translating the substituted sides
  for (const auto& p : in.ctx.typeVars()) without.bindTypeVar(p);
  for (const auto& [y, t] : in.ctx.vars())
    if (y != in.x) without.bind(y, t);

  Context typed;  // ctx with p instantiated to ρ
  for (const auto& p : in.ctx.typeVars())
    if (p != in.p) typed.bindTypeVar(p);
  for (const auto& [y, t] : in.ctx.vars()) typed.bind(y, substType(t, in.p, in.rho));

  auto record = [&](int i, const Term& lhs, const Term& rhs, bool contract) {
    rep.exact[i] = alphaEq(lhs, rhs);
    rep.holds[i] = rep.exact[i] || (contract && alphaEq(contractHeaded(lhs, trfN), contractHeaded(rhs, trfN)));
  };

  Term kx = substTerm(in.k, in.x, trfN);
  Term ekx = substTerm(in.ek, in.x, trfN);
  record(0, substTerm(trfTerm(in.ctx, in.r), in.x, trfN), trfTerm(without, substTerm(in.r, in.x, in.n)), true);
  record(1, substTerm(diamond(in.ctx, in.r, in.k), in.x, trfN), diamond(without, substTerm(in.r, in.x, in.n), kx),
         true);
  record(2, substTerm(at(in.ctx, in.eScrut, in.e, in.ek), in.x, trfN),
         at(without, in.eScrut, substElim(in.e, in.x, in.n), ekx), true);

  Type t4l = substType(trfType(in.tau), in.p, rhoStar);
  Type t4r = trfType(substType(in.tau, in.p, in.rho));
  rep.exact[3] = rep.holds[3] = alphaEq(t4l, t4r);

  record(4, substTypeInTerm(diamond(in.ctx, in.r, in.k), in.p, rhoStar),
         diamond(typed, substTypeInTerm(in.r, in.p, in.rho), substTypeInTerm(in.k, in.p, rhoStar)), false);
  record(5, substTypeInTerm(at(in.ctx, in.eScrut, in.e, in.ek), in.p, rhoStar),
         at(typed, substType(in.eScrut, in.p, in.rho), substElimType(in.e, in.p, in.rho),
            substTypeInTerm(in.ek, in.p, rhoStar)),
         false);
  return rep;
}

}  // namespace fsn
