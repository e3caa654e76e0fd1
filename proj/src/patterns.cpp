#include "fsn/reduce.hpp"
#include "fsn/typecheck.hpp"

namespace fsn {

namespace {

// Row: inner shape (ε, case, unpack). Column: outer eliminator, indexed as
// the Eliminator variant (Arg, Pi1, Pi2, Branches, TyArg, UnpackBranch, ε).
constexpr RuleId kTable[3][7] = {
    {RuleId::CEpsApp, RuleId::CEpsPi1, RuleId::CEpsPi2, RuleId::CEpsCase, RuleId::CEpsTyApp, RuleId::CEpsUnpack,
     RuleId::CEpsEps},
    {RuleId::CCaseApp, RuleId::CCasePi1, RuleId::CCasePi2, RuleId::CCaseCase, RuleId::CCaseTyApp,
     RuleId::CCaseUnpack, RuleId::CCaseEps},
    {RuleId::CUnpackApp, RuleId::CUnpackPi1, RuleId::CUnpackPi2, RuleId::CUnpackCase, RuleId::CUnpackTyApp,
     RuleId::CUnpackUnpack, RuleId::CUnpackEps},
};

// Type of E applied to a term of type `scrutType`.
Type eliminatedType(const Context& env, const Type& scrutType, const Eliminator& e) {
  NameSet used = env.allNames();
  Term probe = applyEliminator(Term::var("_"), e);
  collectAllNames(probe, used);
  std::string hole = freshName("h", used);
  Context c = env;
  c.bind(hole, scrutType);
  return infer(c, applyEliminator(Term::var(hole), e));
}

std::string avoidTerm(const std::string& x, const NameSet& fvE, const Term& body) {
  if (!fvE.count(x)) return x;
  NameSet used = fvE;
  collectFreeVars(body, used);
  return freshName(x, used);
}

std::string avoidType(const std::string& p, const NameSet& ftvE, const Term& body) {
  if (!ftvE.count(p)) return p;
  NameSet used = ftvE;
  collectFreeTypeVars(body, used);
  return freshName(p, used);
}

}  // namespace

std::optional<std::pair<RuleId, Term>> contractByPattern(const Context& env, const Term& redex) {
  auto outer = decompose(redex);
  if (!outer) return std::nullopt;
  auto inner = decompose(outer->first);
  if (!inner) return std::nullopt;
  const Eliminator& e = outer->second;
  const Term& w = inner->first;

  if (auto* b = std::get_if<BranchesElim>(&inner->second)) {
    NameSet fv = freeVars(e);
    std::string x = avoidTerm(b->x, fv, b->left);
    std::string y = avoidTerm(b->y, fv, b->right);
    Term s = x == b->x ? b->left : substTerm(b->left, b->x, Term::var(x));
    Term t = y == b->y ? b->right : substTerm(b->right, b->y, Term::var(y));
    return std::pair{kTable[1][e.index()],
                     Term::caseOf(w, x, applyEliminator(s, e), y, applyEliminator(t, e))};
  }
  if (auto* eps = std::get_if<EpsElim>(&inner->second)) {
    return std::pair{kTable[0][e.index()], Term::eps(w, eliminatedType(env, eps->target, e))};
  }
  if (auto* u = std::get_if<UnpackElim>(&inner->second)) {
    NameSet fv = freeVars(e);
    NameSet ftv = freeTypeVars(e);
    std::string p = avoidType(u->typeVar, ftv, u->body);
    Term body = p == u->typeVar ? u->body : substTypeInTerm(u->body, u->typeVar, Type::atom(p));
    std::string x = avoidTerm(u->termVar, fv, body);
    if (x != u->termVar) body = substTerm(body, u->termVar, Term::var(x));
    return std::pair{kTable[2][e.index()], Term::unpack(w, p, x, applyEliminator(body, e))};
  }
  return std::nullopt;
}

}  // namespace fsn
