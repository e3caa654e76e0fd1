#include "fsn/translate_simple.hpp"

#include "fsn/typecheck.hpp"

namespace fsn {

using K = Term::Kind;
using TK = Type::Kind;

Type trType(const Type& t) {
  switch (t.kind()) {
    case TK::Atom:
    case TK::Bot: return Type::bot();
    case TK::Arrow: return Type::arrow(trType(t.dom()), trType(t.cod()));
    case TK::And:
      return Type::arrow(Type::arrow(trType(t.left()), Type::arrow(trType(t.right()), Type::bot())), Type::bot());
    case TK::Or:
      return Type::arrow(Type::arrow(trType(t.left()), Type::bot()),
                         Type::arrow(Type::arrow(trType(t.right()), Type::bot()), Type::bot()));
    case TK::Forall:
    case TK::Exists: throw NotSimplyTyped("quantified type has no simple translation");
  }
  throw NotSimplyTyped("unknown type");
}

ArrowSpine spine(const Type& t) {
  ArrowSpine s;
  const Type* cur = &t;
  while (cur->is(TK::Arrow)) {
    s.args.push_back(cur->dom());
    cur = &cur->cod();
  }
  if (!cur->is(TK::Bot)) throw NotTargetType("arrow spine does not end in _|_");
  s.final = *cur;
  return s;
}

Type fromSpine(const ArrowSpine& s) {
  Type t = s.final;
  for (auto it = s.args.rbegin(); it != s.args.rend(); ++it) t = Type::arrow(*it, t);
  return t;
}

namespace {

class SimpleTranslator {
 public:
  SimpleTranslator(const Context& ctx, const Term& m) : env_{ctx} {
    used_ = ctx.allNames();
    collectAllNames(m, used_);
  }

  Term go(const Term& m) {
    switch (m.kind()) {
      case K::Var: return m;
      case K::Lam: {
        Type ann = trType(m.type());
        env_.bind(m.name(), m.type());
        Term body = go(m.child(0));
        env_.pop();
        return Term::lam(m.name(), ann, body);
      }
      case K::App: return Term::app(go(m.child(0)), go(m.child(1)));
      case K::Pair: {
        Type s = trType(infer(env_.ctx, m.child(0)));
        Type t = trType(infer(env_.ctx, m.child(1)));
        std::string z = fresh("z");
        Term body = Term::app(Term::app(Term::var(z), go(m.child(0))), go(m.child(1)));
        return Term::lam(z, Type::arrow(s, Type::arrow(t, Type::bot())), body);
      }
      case K::Inj1:
      case K::Inj2: {
        if (!m.type().is(TK::Or)) throw TypeError(TypeErrorKind::IllFormedAnnotation, {}, "injection annotation");
        Type s = trType(m.type().left());
        Type t = trType(m.type().right());
        std::string x = fresh("x");
        std::string y = fresh("y");
        Term body = Term::app(Term::var(m.is(K::Inj1) ? x : y), go(m.child(0)));
        return Term::lam(x, Type::arrow(s, Type::bot()), Term::lam(y, Type::arrow(t, Type::bot()), body));
      }
      case K::Proj1:
      case K::Proj2: {
        Type pt = infer(env_.ctx, m.child(0));
        if (!pt.is(TK::And)) throw TypeError(TypeErrorKind::TypeMismatch, {}, "projection from a non-product");
        Type s = trType(pt.left());
        Type t = trType(pt.right());
        ArrowSpine sp = spine(m.is(K::Proj1) ? s : t);
        std::vector<std::string> xs = freshMany(sp.args.size());
        std::string x = fresh("x");
        std::string y = fresh("y");
        Term sel = applyAll(Term::var(m.is(K::Proj1) ? x : y), xs);
        Term k = Term::lam(x, s, Term::lam(y, t, sel));
        return abstractAll(xs, sp.args, Term::app(go(m.child(0)), k));
      }
      case K::Case: {
        Type at = infer(env_.ctx, m.child(0));
        if (!at.is(TK::Or)) throw TypeError(TypeErrorKind::TypeMismatch, {}, "case on a non-sum");
        Type s = trType(at.left());
        Type t = trType(at.right());
        env_.bind(m.name(), at.left());
        Type delta = infer(env_.ctx, m.child(1));
        env_.pop();
        ArrowSpine sp = spine(trType(delta));
        std::vector<std::string> xs = freshMany(sp.args.size());
        Term scrut = go(m.child(0));
        env_.bind(m.name(), at.left());
        Term left = Term::lam(m.name(), s, applyAll(go(m.child(1)), xs));
        env_.pop();
        env_.bind(m.name2(), at.right());
        Term right = Term::lam(m.name2(), t, applyAll(go(m.child(2)), xs));
        env_.pop();
        return abstractAll(xs, sp.args, Term::app(Term::app(scrut, left), right));
      }
      case K::Eps: {
        ArrowSpine sp = spine(trType(m.type()));
        std::vector<std::string> xs = freshMany(sp.args.size());
        return abstractAll(xs, sp.args, go(m.child(0)));
      }
      case K::TyLam:
      case K::TyApp:
      case K::Pack:
      case K::Unpack: throw NotSimplyTyped(std::string(kindName(m.kind())) + " has no simple translation");
    }
    throw NotSimplyTyped("unknown term");
  }

 private:
  struct Env {
    Context ctx;
    void bind(const std::string& x, const Type& t) { ctx.bind(x, t); }
    void pop() { ctx.unbind(); }
  };

  std::string fresh(const std::string& base) {
    std::string n = freshName(base, used_);
    used_.insert(n);
    return n;
  }

  std::vector<std::string> freshMany(std::size_t n) {
    std::vector<std::string> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(fresh("a"));
    return xs;
  }

  static Term applyAll(Term f, const std::vector<std::string>& xs) {
    for (const auto& x : xs) f = Term::app(std::move(f), Term::var(x));
    return f;
  }

  static Term abstractAll(const std::vector<std::string>& xs, const std::vector<Type>& tys, Term body) {
    for (std::size_t i = xs.size(); i-- > 0;) body = Term::lam(xs[i], tys[i], std::move(body));
    return body;
  }

  Env env_;
  NameSet used_;
};

}  // namespace

Term trTerm(const Context& ctx, const Term& m) {
  SimpleTranslator t(ctx, m);
  return t.go(m);
}

Context trContext(const Context& ctx) {
  Context out;
  for (const auto& [x, t] : ctx.vars()) out.bind(x, trType(t));
  return out;
}

std::size_t defaultDepthCap(const Term& translated) { return 16 + 4 * size(translated); }

SimulationResult checkSimulationSimple(const Context& ctx, const Term& m, const ReductionStep& s,
                                       std::optional<std::size_t> depthCap, std::size_t stateBudget) {
  Term after = step(ctx, m, s);
  SimulationResult r{{}, trTerm(ctx, m), trTerm(ctx, after)};
  SearchLimits lim{depthCap.value_or(defaultDepthCap(r.before)), stateBudget};
  r.reach = reachableFocused(r.before, r.after, TargetRules{.eta = true}, lim);
  return r;
}

}  // namespace fsn
