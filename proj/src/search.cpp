#include "fsn/search.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace fsn {

using K = Term::Kind;

const char* reachOutcomeName(ReachOutcome o) {
  switch (o) {
    case ReachOutcome::Found: return "Found";
    case ReachOutcome::Identical: return "Identical";
    case ReachOutcome::NotReachable: return "NotReachable";
    case ReachOutcome::DepthCapExceeded: return "DepthCapExceeded";
  }
  return "?";
}

namespace {

std::optional<Term> contractTarget(const Term& m, TargetRules rules) {
  if (m.is(K::App) && m.child(0).is(K::Lam)) {
    const Term& f = m.child(0);
    return substTerm(f.child(0), f.name(), m.child(1));
  }
  if (m.is(K::TyApp) && m.child(0).is(K::TyLam)) {
    const Term& f = m.child(0);
    return substTypeInTerm(f.child(0), f.name(), m.type());
  }
  if (rules.eta && m.is(K::Lam)) {
    const Term& b = m.child(0);
    if (b.is(K::App) && b.child(1).is(K::Var) && b.child(1).name() == m.name() && !occursFree(m.name(), b.child(0)))
      return b.child(0);
  }
  return std::nullopt;
}

struct Frozen {
  std::unordered_set<std::size_t> hashes;
  bool contains(const Term& m) const { return !hashes.empty() && hashes.count(alphaHash(m)); }
};

void reducts(const Term& m, TargetRules rules, const Frozen& frozen, std::vector<Term>& out) {
  if (frozen.contains(m)) return;
  if (auto r = contractTarget(m, rules)) out.push_back(std::move(*r));
  for (std::size_t i = 0; i < m.arity(); ++i) {
    std::vector<Term> sub;
    reducts(m.child(i), rules, frozen, sub);
    for (auto& s : sub) out.push_back(m.withChild(i, std::move(s)));
  }
}

ReachResult bfs(const Term& from, const Term& to, TargetRules rules, SearchLimits limits, const Frozen& frozen) {
  ReachResult res;
  if (alphaEq(from, to)) {
    res.outcome = ReachOutcome::Identical;
    return res;
  }
  std::unordered_map<std::size_t, std::vector<Term>> seen;
  auto visit = [&](const Term& t) {
    auto& bucket = seen[alphaHash(t)];
    for (const auto& u : bucket)
      if (alphaEq(u, t)) return false;
    bucket.push_back(t);
    return true;
  };
  visit(from);
  std::deque<std::pair<Term, std::size_t>> queue{{from, 0}};
  bool capped = false;
  while (!queue.empty()) {
    auto [t, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= limits.depthCap) {
      capped = true;
      continue;
    }
    std::vector<Term> next;
    reducts(t, rules, frozen, next);
    for (auto& n : next) {
      if (alphaEq(n, to)) {
        res.outcome = ReachOutcome::Found;
        res.steps = depth + 1;
        return res;
      }
      if (!visit(n)) continue;
      if (++res.states >= limits.stateBudget) {
        res.outcome = ReachOutcome::DepthCapExceeded;
        return res;
      }
      queue.emplace_back(std::move(n), depth + 1);
    }
  }
  res.outcome = capped ? ReachOutcome::DepthCapExceeded : ReachOutcome::NotReachable;
  return res;
}

bool sameShallow(const Term& a, const Term& b) {
  if (a.kind() != b.kind() || a.name() != b.name() || a.name2() != b.name2()) return false;
  switch (a.kind()) {
    case K::Lam:
    case K::Inj1:
    case K::Inj2:
    case K::Eps:
    case K::TyApp: return alphaEq(a.type(), b.type());
    case K::Pack: return alphaEq(a.type(), b.type()) && alphaEq(a.type2(), b.type2());
    default: return true;
  }
}

// Descends while the nodes agree and exactly one child differs.
Path diffRoot(const Term& a, const Term& b) {
  Path p;
  const Term* x = &a;
  const Term* y = &b;
  while (sameShallow(*x, *y)) {
    int differing = -1;
    for (std::size_t i = 0; i < x->arity(); ++i) {
      if (alphaEq(x->child(i), y->child(i))) continue;
      if (differing >= 0) return p;
      differing = static_cast<int>(i);
    }
    if (differing < 0) return p;
    p.push_back(differing);
    x = &x->child(static_cast<std::size_t>(differing));
    y = &y->child(static_cast<std::size_t>(differing));
  }
  return p;
}

void collectHashes(const Term& m, std::unordered_set<std::size_t>& out) {
  out.insert(alphaHash(m));
  for (std::size_t i = 0; i < m.arity(); ++i) collectHashes(m.child(i), out);
}

}  // namespace

std::vector<Term> targetReducts(const Term& m, TargetRules rules) {
  std::vector<Term> out;
  reducts(m, rules, Frozen{}, out);
  return out;
}

ReachResult reachable(const Term& from, const Term& to, TargetRules rules, SearchLimits limits) {
  return bfs(from, to, rules, limits, Frozen{});
}

ReachResult reachableFocused(const Term& from, const Term& to, TargetRules rules, SearchLimits limits) {
  if (alphaEq(from, to)) return bfs(from, to, rules, limits, Frozen{});
  Path p = diffRoot(from, to);
  const Term& a = subtermAt(from, p);
  const Term& b = subtermAt(to, p);

  Frozen frozen;
  collectHashes(b, frozen.hashes);
  frozen.hashes.erase(alphaHash(a));
  ReachResult r = bfs(a, b, rules, limits, frozen);
  if (r.found()) return r;
  std::size_t spent = r.states;

  r = bfs(a, b, rules, limits, Frozen{});
  spent += r.states;
  if (r.found()) {
    r.states = spent;
    return r;
  }
  if (!p.empty()) {
    SearchLimits global = limits;
    global.stateBudget = std::max<std::size_t>(limits.stateBudget / 4, 1);
    r = bfs(from, to, rules, global, Frozen{});
    spent += r.states;
  }
  r.states = spent;
  return r;
}

}  // namespace fsn
