#include "fsn/reduce.hpp"

#include <charconv>

#include "fsn/typecheck.hpp"

namespace fsn {

using K = Term::Kind;
using TK = Type::Kind;

namespace {

constexpr std::array<const char*, kRuleCount> kRuleNames = {
    "B-ARROW",        "B-PI1",          "B-PI2",        "B-CASE-INL",    "B-CASE-INR",    "B-UNPACK",
    "B-TYAPP",        "C-EPS-APP",      "C-EPS-PI1",    "C-EPS-PI2",     "C-EPS-CASE",    "C-EPS-EPS",
    "C-CASE-APP",     "C-CASE-PI1",     "C-CASE-PI2",   "C-CASE-CASE",   "C-CASE-EPS",    "C-CASE-TYAPP",
    "C-EPS-TYAPP",    "C-UNPACK-TYAPP", "C-CASE-UNPACK", "C-EPS-UNPACK", "C-UNPACK-UNPACK", "C-UNPACK-APP",
    "C-UNPACK-PI1",   "C-UNPACK-PI2",   "C-UNPACK-CASE", "C-UNPACK-EPS",
};

}  // namespace

const std::array<RuleId, kRuleCount>& allRules() {
  static const std::array<RuleId, kRuleCount> rules = [] {
    std::array<RuleId, kRuleCount> a{};
    for (std::size_t i = 0; i < kRuleCount; ++i) a[i] = static_cast<RuleId>(i);
    return a;
  }();
  return rules;
}

const char* ruleName(RuleId r) { return kRuleNames[ruleIndex(r)]; }

std::optional<RuleId> parseRuleName(std::string_view name) {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (name == kRuleNames[i]) return static_cast<RuleId>(i);
  return std::nullopt;
}

bool isCommutative(RuleId r) { return ruleIndex(r) >= kBetaRuleCount; }

const char* strategyName(Strategy s) {
  switch (s) {
    case Strategy::LeftmostOutermost: return "lo";
    case Strategy::RightmostInnermost: return "ri";
    case Strategy::CommutationsFirst: return "cfirst";
  }
  return "?";
}

FuelExhausted::FuelExhausted(Term reached, std::vector<ReductionStep> trace)
    : std::runtime_error("fuel exhausted after " + std::to_string(trace.size()) + " steps"),
      reached_(std::move(reached)),
      trace_(std::move(trace)) {}

std::optional<RuleId> classify(const Term& m) {
  if (m.arity() == 0 || !isEliminatorKind(m.kind())) return std::nullopt;
  K inner = m.child(0).kind();
  auto perm = [&](RuleId eps, RuleId cas, RuleId unp) -> std::optional<RuleId> {
    if (inner == K::Eps) return eps;
    if (inner == K::Case) return cas;
    if (inner == K::Unpack) return unp;
    return std::nullopt;
  };
  switch (m.kind()) {
    case K::App:
      if (inner == K::Lam) return RuleId::BArrow;
      return perm(RuleId::CEpsApp, RuleId::CCaseApp, RuleId::CUnpackApp);
    case K::Proj1:
      if (inner == K::Pair) return RuleId::BPi1;
      return perm(RuleId::CEpsPi1, RuleId::CCasePi1, RuleId::CUnpackPi1);
    case K::Proj2:
      if (inner == K::Pair) return RuleId::BPi2;
      return perm(RuleId::CEpsPi2, RuleId::CCasePi2, RuleId::CUnpackPi2);
    case K::Case:
      if (inner == K::Inj1) return RuleId::BCaseInl;
      if (inner == K::Inj2) return RuleId::BCaseInr;
      return perm(RuleId::CEpsCase, RuleId::CCaseCase, RuleId::CUnpackCase);
    case K::Eps: return perm(RuleId::CEpsEps, RuleId::CCaseEps, RuleId::CUnpackEps);
    case K::TyApp:
      if (inner == K::TyLam) return RuleId::BTyApp;
      return perm(RuleId::CEpsTyApp, RuleId::CCaseTyApp, RuleId::CUnpackTyApp);
    case K::Unpack:
      if (inner == K::Pack) return RuleId::BUnpack;
      return perm(RuleId::CEpsUnpack, RuleId::CCaseUnpack, RuleId::CUnpackUnpack);
    default: return std::nullopt;
  }
}

namespace {

void collectRedexes(const Term& m, Path& path, std::vector<ReductionStep>& out) {
  if (auto r = classify(m)) out.push_back({path, *r});
  for (std::size_t i = 0; i < m.arity(); ++i) {
    path.push_back(static_cast<int>(i));
    collectRedexes(m.child(i), path, out);
    path.pop_back();
  }
}

// Names the pushed eliminator refers to: free term variables of the outer
// node's other children and free type variables of its annotations.
struct OuterNames {
  NameSet vars;
  NameSet typeVars;
};

OuterNames outerNames(const Term& outer) {
  auto d = decompose(outer);
  return {freeVars(d->second), freeTypeVars(d->second)};
}

// Renames term binder `x` of `body` when it would capture a name in `avoid`.
std::pair<std::string, Term> clearTermBinder(const std::string& x, const Term& body, const OuterNames& n) {
  if (!n.vars.count(x)) return {x, body};
  NameSet used = n.vars;
  collectFreeVars(body, used);
  std::string fresh = freshName(x, used);
  return {fresh, substTerm(body, x, Term::var(fresh))};
}

std::pair<std::string, Term> clearTypeBinder(const std::string& p, const Term& body, const OuterNames& n) {
  if (!n.typeVars.count(p)) return {p, body};
  NameSet used = n.typeVars;
  collectFreeTypeVars(body, used);
  std::string fresh = freshName(p, used);
  return {fresh, substTypeInTerm(body, p, Type::atom(fresh))};
}

[[noreturn]] void badShape(RuleId r) {
  throw InvalidStep(std::string("term does not match the left-hand side of ") + ruleName(r));
}

// (W[x.S, y.T]) E ⇝ W[x.S E, y.T E], where E is `outer` minus its scrutinee.
Term pushIntoCase(const Term& outer) {
  const Term& w = outer.child(0);
  OuterNames n = outerNames(outer);
  auto [x, s] = clearTermBinder(w.name(), w.child(1), n);
  auto [y, t] = clearTermBinder(w.name2(), w.child(2), n);
  return Term::caseOf(w.child(0), x, outer.withChild(0, s), y, outer.withChild(0, t));
}

// (M[p, x.P]) E ⇝ M[p, x.P E].
Term pushIntoUnpack(const Term& outer) {
  const Term& u = outer.child(0);
  OuterNames n = outerNames(outer);
  auto [p, body1] = clearTypeBinder(u.name(), u.child(1), n);
  auto [x, body2] = clearTermBinder(u.name2(), body1, n);
  return Term::unpack(u.child(0), p, x, outer.withChild(0, body2));
}

Type epsAnnotation(const Term& inner, TK want, RuleId r) {
  const Type& t = inner.type();
  if (!t.is(want)) badShape(r);
  return t;
}

}  // namespace

std::vector<ReductionStep> redexes(const Term& m) {
  std::vector<ReductionStep> out;
  Path path;
  collectRedexes(m, path, out);
  return out;
}

Term contract(const Context& env, const Term& m, RuleId rule) {
  auto actual = classify(m);
  if (!actual || *actual != rule) badShape(rule);
  const Term& in = m.child(0);
  switch (rule) {
    case RuleId::BArrow: return substTerm(in.child(0), in.name(), m.child(1));
    case RuleId::BPi1: return in.child(0);
    case RuleId::BPi2: return in.child(1);
    case RuleId::BCaseInl: return substTerm(m.child(1), m.name(), in.child(0));
    case RuleId::BCaseInr: return substTerm(m.child(2), m.name2(), in.child(0));
    case RuleId::BUnpack:
      return substTerm(substTypeInTerm(m.child(1), m.name(), in.type()), m.name2(), in.child(0));
    case RuleId::BTyApp: return substTypeInTerm(in.child(0), in.name(), m.type());

    case RuleId::CEpsApp: return Term::eps(in.child(0), epsAnnotation(in, TK::Arrow, rule).cod());
    case RuleId::CEpsPi1: return Term::eps(in.child(0), epsAnnotation(in, TK::And, rule).left());
    case RuleId::CEpsPi2: return Term::eps(in.child(0), epsAnnotation(in, TK::And, rule).right());
    case RuleId::CEpsCase: {
      Type sum = epsAnnotation(in, TK::Or, rule);
      Context inner = env;
      inner.bind(m.name(), sum.left());
      return Term::eps(in.child(0), infer(inner, m.child(1)));
    }
    case RuleId::CEpsEps: return Term::eps(in.child(0), m.type());
    case RuleId::CEpsTyApp: {
      Type all = epsAnnotation(in, TK::Forall, rule);
      return Term::eps(in.child(0), substType(all.body(), all.name(), m.type()));
    }
    case RuleId::CEpsUnpack: {
      Type ex = epsAnnotation(in, TK::Exists, rule);
      Context inner = env;
      inner.bindTypeVar(m.name());
      inner.bind(m.name2(), substType(ex.body(), ex.name(), Type::atom(m.name())));
      return Term::eps(in.child(0), infer(inner, m.child(1)));
    }

    case RuleId::CCaseApp:
    case RuleId::CCasePi1:
    case RuleId::CCasePi2:
    case RuleId::CCaseCase:
    case RuleId::CCaseEps:
    case RuleId::CCaseTyApp:
    case RuleId::CCaseUnpack: return pushIntoCase(m);

    case RuleId::CUnpackApp:
    case RuleId::CUnpackPi1:
    case RuleId::CUnpackPi2:
    case RuleId::CUnpackCase:
    case RuleId::CUnpackEps:
    case RuleId::CUnpackTyApp:
    case RuleId::CUnpackUnpack: return pushIntoUnpack(m);
  }
  badShape(rule);
}

namespace {

bool needsTypes(RuleId r) { return r == RuleId::CEpsCase || r == RuleId::CEpsUnpack; }

}  // namespace

Term step(const Context& ctx, const Term& m, const ReductionStep& s) {
  const Term* sub;
  try {
    sub = &subtermAt(m, s.path);
  } catch (const std::exception&) {
    throw InvalidStep("no subterm at path " + pathToString(s.path));
  }
  Term r = needsTypes(s.rule) ? contract(contextAt(ctx, m, s.path), *sub, s.rule) : contract(Context{}, *sub, s.rule);
  return replaceAt(m, s.path, r);
}

Term step(const Term& m, const ReductionStep& s) { return step(Context{}, m, s); }

std::optional<ReductionStep> choose(const std::vector<ReductionStep>& candidates, Strategy strat) {
  if (candidates.empty()) return std::nullopt;
  switch (strat) {
    case Strategy::LeftmostOutermost: return candidates.front();
    case Strategy::RightmostInnermost: return candidates.back();
    case Strategy::CommutationsFirst:
      for (const auto& c : candidates)
        if (isCommutative(c.rule)) return c;
      return candidates.front();
  }
  return std::nullopt;
}

Normalized normalize(const Context& ctx, const Term& m, Strategy strat, std::size_t fuel, RedexFilter filter) {
  Normalized out{m, {}};
  for (;;) {
    auto rs = redexes(out.term);
    if (filter == RedexFilter::CommutationsOnly)
      std::erase_if(rs, [](const ReductionStep& s) { return !isCommutative(s.rule); });
    auto next = choose(rs, strat);
    if (!next) return out;
    if (out.trace.size() >= fuel) throw FuelExhausted(out.term, std::move(out.trace));
    out.term = step(ctx, out.term, *next);
    out.trace.push_back(std::move(*next));
  }
}

std::string pathToString(const Path& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

std::optional<Path> parsePath(std::string_view text) {
  Path p;
  if (text == "root" || text.empty()) return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string_view part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty() || v < 0 || v > 2) return std::nullopt;
    p.push_back(v);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return p;
}

}  // namespace fsn
