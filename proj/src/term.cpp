#include "fsn/term.hpp"

#include <functional>
#include <stdexcept>

namespace fsn {

using K = Term::Kind;

Term Term::make(Kind k, std::string name, std::string name2, Type ty, Type ty2,
                std::initializer_list<Term> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  n->name2 = std::move(name2);
  n->ty = std::move(ty);
  n->ty2 = std::move(ty2);
  n->arity = static_cast<std::uint8_t>(kids.size());
  std::size_t i = 0;
  for (const auto& c : kids) n->kids[i++] = c;
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::var(std::string name) { return make(K::Var, std::move(name), {}, {}, {}, {}); }
Term Term::lam(std::string x, Type ann, Term body) {
  return make(K::Lam, std::move(x), {}, std::move(ann), {}, {std::move(body)});
}
Term Term::app(Term fun, Term arg) { return make(K::App, {}, {}, {}, {}, {std::move(fun), std::move(arg)}); }
Term Term::pair(Term left, Term right) {
  return make(K::Pair, {}, {}, {}, {}, {std::move(left), std::move(right)});
}
Term Term::proj1(Term t) { return make(K::Proj1, {}, {}, {}, {}, {std::move(t)}); }
Term Term::proj2(Term t) { return make(K::Proj2, {}, {}, {}, {}, {std::move(t)}); }
Term Term::inj1(Term t, Type sumAnn) { return make(K::Inj1, {}, {}, std::move(sumAnn), {}, {std::move(t)}); }
Term Term::inj2(Term t, Type sumAnn) { return make(K::Inj2, {}, {}, std::move(sumAnn), {}, {std::move(t)}); }
Term Term::caseOf(Term scrut, std::string x, Term left, std::string y, Term right) {
  return make(K::Case, std::move(x), std::move(y), {}, {},
              {std::move(scrut), std::move(left), std::move(right)});
}
Term Term::eps(Term t, Type target) { return make(K::Eps, {}, {}, std::move(target), {}, {std::move(t)}); }
Term Term::tyLam(std::string p, Term body) { return make(K::TyLam, std::move(p), {}, {}, {}, {std::move(body)}); }
Term Term::tyApp(Term t, Type arg) { return make(K::TyApp, {}, {}, std::move(arg), {}, {std::move(t)}); }
Term Term::pack(Type witness, Term t, Type exAnn) {
  return make(K::Pack, {}, {}, std::move(witness), std::move(exAnn), {std::move(t)});
}
Term Term::unpack(Term scrut, std::string p, std::string x, Term body) {
  return make(K::Unpack, std::move(p), std::move(x), {}, {}, {std::move(scrut), std::move(body)});
}

Term Term::withChild(std::size_t i, Term c) const {
  if (node_->kids[i].sameNode(c)) return *this;
  auto n = std::make_shared<Node>(*node_);
  n->kids[i] = std::move(c);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

const char* kindName(Term::Kind k) {
  switch (k) {
    case K::Var: return "Var";
    case K::Lam: return "Lam";
    case K::App: return "App";
    case K::Pair: return "Pair";
    case K::Proj1: return "Proj1";
    case K::Proj2: return "Proj2";
    case K::Inj1: return "Inj1";
    case K::Inj2: return "Inj2";
    case K::Case: return "Case";
    case K::Eps: return "Eps";
    case K::TyLam: return "TyLam";
    case K::TyApp: return "TyApp";
    case K::Pack: return "Pack";
    case K::Unpack: return "Unpack";
  }
  return "?";
}

bool isEliminatorKind(Term::Kind k) {
  switch (k) {
    case K::App:
    case K::Proj1:
    case K::Proj2:
    case K::Case:
    case K::Eps:
    case K::TyApp:
    case K::Unpack: return true;
    default: return false;
  }
}

bool isIntroductionKind(Term::Kind k) {
  switch (k) {
    case K::Lam:
    case K::Pair:
    case K::Inj1:
    case K::Inj2:
    case K::TyLam:
    case K::Pack: return true;
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void freeVarsGo(const Term& m, std::vector<std::string>& bound, NameSet& out) {
  auto isBound = [&](const std::string& x) {
    for (const auto& b : bound)
      if (b == x) return true;
    return false;
  };
  switch (m.kind()) {
    case K::Var:
      if (!isBound(m.name())) out.insert(m.name());
      return;
    case K::Lam:
      bound.push_back(m.name());
      freeVarsGo(m.child(0), bound, out);
      bound.pop_back();
      return;
    case K::Case:
      freeVarsGo(m.child(0), bound, out);
      bound.push_back(m.name());
      freeVarsGo(m.child(1), bound, out);
      bound.back() = m.name2();
      freeVarsGo(m.child(2), bound, out);
      bound.pop_back();
      return;
    case K::Unpack:
      freeVarsGo(m.child(0), bound, out);
      bound.push_back(m.name2());
      freeVarsGo(m.child(1), bound, out);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < m.arity(); ++i) freeVarsGo(m.child(i), bound, out);
  }
}

void collectTypeFree(const Type& t, const std::vector<std::string>& bound, NameSet& out) {
  NameSet tmp;
  collectFreeTypeVars(t, tmp);
  for (const auto& p : tmp) {
    bool b = false;
    for (const auto& q : bound)
      if (q == p) b = true;
    if (!b) out.insert(p);
  }
}

void freeTypeVarsGo(const Term& m, std::vector<std::string>& bound, NameSet& out) {
  switch (m.kind()) {
    case K::Var: return;
    case K::Lam:
    case K::Inj1:
    case K::Inj2:
    case K::Eps:
    case K::TyApp:
      collectTypeFree(m.type(), bound, out);
      break;
    case K::Pack:
      collectTypeFree(m.type(), bound, out);
      collectTypeFree(m.type2(), bound, out);
      break;
    case K::TyLam:
      bound.push_back(m.name());
      freeTypeVarsGo(m.child(0), bound, out);
      bound.pop_back();
      return;
    case K::Unpack:
      freeTypeVarsGo(m.child(0), bound, out);
      bound.push_back(m.name());
      freeTypeVarsGo(m.child(1), bound, out);
      bound.pop_back();
      return;
    default: break;
  }
  for (std::size_t i = 0; i < m.arity(); ++i) freeTypeVarsGo(m.child(i), bound, out);
}

}  // namespace

void collectFreeVars(const Term& m, NameSet& out) {
  std::vector<std::string> bound;
  freeVarsGo(m, bound, out);
}

NameSet freeVars(const Term& m) {
  NameSet out;
  collectFreeVars(m, out);
  return out;
}

bool occursFree(const std::string& x, const Term& m) {
  switch (m.kind()) {
    case K::Var: return m.name() == x;
    case K::Lam: return m.name() != x && occursFree(x, m.child(0));
    case K::Case:
      return occursFree(x, m.child(0)) || (m.name() != x && occursFree(x, m.child(1))) ||
             (m.name2() != x && occursFree(x, m.child(2)));
    case K::Unpack: return occursFree(x, m.child(0)) || (m.name2() != x && occursFree(x, m.child(1)));
    default:
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (occursFree(x, m.child(i))) return true;
      return false;
  }
}

void collectFreeTypeVars(const Term& m, NameSet& out) {
  std::vector<std::string> bound;
  freeTypeVarsGo(m, bound, out);
}

NameSet freeTypeVars(const Term& m) {
  NameSet out;
  collectFreeTypeVars(m, out);
  return out;
}

bool typeVarOccursFree(const std::string& p, const Term& m) {
  switch (m.kind()) {
    case K::Var: return false;
    case K::Lam:
    case K::Inj1:
    case K::Inj2:
    case K::Eps:
    case K::TyApp:
      if (occursFreeIn(p, m.type())) return true;
      break;
    case K::Pack:
      if (occursFreeIn(p, m.type()) || occursFreeIn(p, m.type2())) return true;
      break;
    case K::TyLam: return m.name() != p && typeVarOccursFree(p, m.child(0));
    case K::Unpack:
      return typeVarOccursFree(p, m.child(0)) || (m.name() != p && typeVarOccursFree(p, m.child(1)));
    default: break;
  }
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (typeVarOccursFree(p, m.child(i))) return true;
  return false;
}

void collectAllNames(const Type& t, NameSet& out) {
  switch (t.kind()) {
    case Type::Kind::Atom: out.insert(t.name()); return;
    case Type::Kind::Bot: return;
    case Type::Kind::Forall:
    case Type::Kind::Exists:
      out.insert(t.name());
      collectAllNames(t.body(), out);
      return;
    default:
      collectAllNames(t.dom(), out);
      collectAllNames(t.cod(), out);
  }
}

void collectAllNames(const Term& m, NameSet& out) {
  if (!m.name().empty()) out.insert(m.name());
  if (!m.name2().empty()) out.insert(m.name2());
  switch (m.kind()) {
    case K::Lam:
    case K::Inj1:
    case K::Inj2:
    case K::Eps:
    case K::TyApp: collectAllNames(m.type(), out); break;
    case K::Pack:
      collectAllNames(m.type(), out);
      collectAllNames(m.type2(), out);
      break;
    default: break;
  }
  for (std::size_t i = 0; i < m.arity(); ++i) collectAllNames(m.child(i), out);
}

// ---------------------------------------------------------------------------
// Substitution

namespace {

NameSet unionOf(NameSet a, const NameSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

// Renames the bound term variable `y` of `body` to a name outside `avoid`.
std::pair<std::string, Term> freshenTermBinder(const std::string& y, const Term& body, NameSet avoid) {
  collectFreeVars(body, avoid);
  std::string fresh = freshName(y, avoid);
  return {fresh, substTerm(body, y, Term::var(fresh))};
}

std::pair<std::string, Term> freshenTypeBinder(const std::string& p, const Term& body, NameSet avoid) {
  collectFreeTypeVars(body, avoid);
  std::string fresh = freshName(p, avoid);
  return {fresh, substTypeInTerm(body, p, Type::atom(fresh))};
}

struct TermSubst {
  const std::string& x;
  const Term& n;
  NameSet fvN;
  NameSet ftvN;

  // Prepares a body under term binder `y` (and optionally type binder `p`).
  Term underBinder(std::string& y, const Term& body) {
    if (fvN.count(y) && occursFree(x, body)) {
      auto [fresh, renamed] = freshenTermBinder(y, body, unionOf(fvN, {x}));
      y = fresh;
      return go(renamed);
    }
    return go(body);
  }

  Term go(const Term& m) {
    switch (m.kind()) {
      case K::Var: return m.name() == x ? n : m;
      case K::Lam: {
        if (m.name() == x) return m;
        std::string y = m.name();
        Term body = underBinder(y, m.child(0));
        if (y == m.name() && body.sameNode(m.child(0))) return m;
        return Term::lam(y, m.type(), body);
      }
      case K::Case: {
        Term scrut = go(m.child(0));
        std::string y1 = m.name(), y2 = m.name2();
        Term l = y1 == x ? m.child(1) : underBinder(y1, m.child(1));
        Term r = y2 == x ? m.child(2) : underBinder(y2, m.child(2));
        if (scrut.sameNode(m.child(0)) && y1 == m.name() && y2 == m.name2() && l.sameNode(m.child(1)) &&
            r.sameNode(m.child(2)))
          return m;
        return Term::caseOf(scrut, y1, l, y2, r);
      }
      case K::TyLam: {
        std::string p = m.name();
        Term body = m.child(0);
        if (ftvN.count(p) && occursFree(x, body)) {
          auto [fresh, renamed] = freshenTypeBinder(p, body, unionOf(ftvN, {}));
          p = fresh;
          body = renamed;
        }
        Term nb = go(body);
        if (p == m.name() && nb.sameNode(m.child(0))) return m;
        return Term::tyLam(p, nb);
      }
      case K::Unpack: {
        Term scrut = go(m.child(0));
        if (m.name2() == x) return m.withChild(0, scrut);
        std::string p = m.name();
        std::string y = m.name2();
        Term body = m.child(1);
        if (ftvN.count(p) && occursFree(x, body)) {
          auto [fresh, renamed] = freshenTypeBinder(p, body, ftvN);
          p = fresh;
          body = renamed;
        }
        Term nb = underBinder(y, body);
        if (scrut.sameNode(m.child(0)) && p == m.name() && y == m.name2() && nb.sameNode(m.child(1)))
          return m;
        return Term::unpack(scrut, p, y, nb);
      }
      default: {
        Term out = m;
        for (std::size_t i = 0; i < m.arity(); ++i) out = out.withChild(i, go(m.child(i)));
        return out;
      }
    }
  }
};

Term retype(const Term& m, Type ty, Type ty2) {
  switch (m.kind()) {
    case K::Lam: return Term::lam(m.name(), std::move(ty), m.child(0));
    case K::Inj1: return Term::inj1(m.child(0), std::move(ty));
    case K::Inj2: return Term::inj2(m.child(0), std::move(ty));
    case K::Eps: return Term::eps(m.child(0), std::move(ty));
    case K::TyApp: return Term::tyApp(m.child(0), std::move(ty));
    case K::Pack: return Term::pack(std::move(ty), m.child(0), std::move(ty2));
    default: return m;
  }
}

bool hasAnnotation(K k) {
  return k == K::Lam || k == K::Inj1 || k == K::Inj2 || k == K::Eps || k == K::TyApp || k == K::Pack;
}

struct TypeInTermSubst {
  const std::string& p;
  const Type& s;
  NameSet ftvS;

  Term go(const Term& m) {
    switch (m.kind()) {
      case K::Var: return m;
      case K::TyLam: {
        if (m.name() == p) return m;
        std::string q = m.name();
        Term body = m.child(0);
        if (ftvS.count(q) && typeVarOccursFree(p, body)) {
          auto [fresh, renamed] = freshenTypeBinder(q, body, unionOf(ftvS, {p}));
          q = fresh;
          body = renamed;
        }
        Term nb = go(body);
        if (q == m.name() && nb.sameNode(m.child(0))) return m;
        return Term::tyLam(q, nb);
      }
      case K::Unpack: {
        Term scrut = go(m.child(0));
        if (m.name() == p) return m.withChild(0, scrut);
        std::string q = m.name();
        Term body = m.child(1);
        if (ftvS.count(q) && typeVarOccursFree(p, body)) {
          auto [fresh, renamed] = freshenTypeBinder(q, body, unionOf(ftvS, {p}));
          q = fresh;
          body = renamed;
        }
        Term nb = go(body);
        if (scrut.sameNode(m.child(0)) && q == m.name() && nb.sameNode(m.child(1))) return m;
        return Term::unpack(scrut, q, m.name2(), nb);
      }
      default: {
        Term out = m;
        if (hasAnnotation(m.kind())) {
          Type t1 = substType(m.type(), p, s);
          Type t2 = m.is(K::Pack) ? substType(m.type2(), p, s) : m.type2();
          if (!t1.sameNode(m.type()) || !t2.sameNode(m.type2())) out = retype(m, t1, t2);
        }
        for (std::size_t i = 0; i < m.arity(); ++i) out = out.withChild(i, go(m.child(i)));
        return out;
      }
    }
  }
};

}  // namespace

Term substTerm(const Term& m, const std::string& x, const Term& n) {
  TermSubst s{x, n, freeVars(n), freeTypeVars(n)};
  return s.go(m);
}

Term substTypeInTerm(const Term& m, const std::string& p, const Type& s) {
  if (!typeVarOccursFree(p, m)) return m;
  TypeInTermSubst st{p, s, freeTypeVars(s)};
  return st.go(m);
}

// ---------------------------------------------------------------------------
// α-equivalence and hashing

namespace {

struct AlphaCmp {
  detail::BinderPairs terms;
  detail::BinderPairs types;

  bool ty(const Type& a, const Type& b) { return detail::alphaEqTypes(a, b, types); }

  bool go(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case K::Var: return terms.match(a.name(), b.name());
      case K::Lam: {
        if (!ty(a.type(), b.type())) return false;
        terms.pairs.emplace_back(a.name(), b.name());
        bool r = go(a.child(0), b.child(0));
        terms.pairs.pop_back();
        return r;
      }
      case K::Case: {
        if (!go(a.child(0), b.child(0))) return false;
        terms.pairs.emplace_back(a.name(), b.name());
        bool r = go(a.child(1), b.child(1));
        terms.pairs.back() = {a.name2(), b.name2()};
        r = r && go(a.child(2), b.child(2));
        terms.pairs.pop_back();
        return r;
      }
      case K::TyLam: {
        types.pairs.emplace_back(a.name(), b.name());
        bool r = go(a.child(0), b.child(0));
        types.pairs.pop_back();
        return r;
      }
      case K::Unpack: {
        if (!go(a.child(0), b.child(0))) return false;
        types.pairs.emplace_back(a.name(), b.name());
        terms.pairs.emplace_back(a.name2(), b.name2());
        bool r = go(a.child(1), b.child(1));
        types.pairs.pop_back();
        terms.pairs.pop_back();
        return r;
      }
      case K::Pack:
        if (!ty(a.type2(), b.type2())) return false;
        [[fallthrough]];
      case K::Inj1:
      case K::Inj2:
      case K::Eps:
      case K::TyApp:
        if (!ty(a.type(), b.type())) return false;
        [[fallthrough]];
      default:
        for (std::size_t i = 0; i < a.arity(); ++i)
          if (!go(a.child(i), b.child(i))) return false;
        return true;
    }
  }
};

std::size_t mixHash(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct AlphaHasher {
  std::vector<std::string> terms;
  std::vector<std::string> types;

  std::size_t var(const std::string& x) {
    for (std::size_t i = terms.size(); i-- > 0;)
      if (terms[i] == x) return mixHash(17, terms.size() - i);
    return mixHash(19, std::hash<std::string>{}(x));
  }

  std::size_t go(const Term& m) {
    std::size_t h = static_cast<std::size_t>(m.kind()) * 131 + 3;
    switch (m.kind()) {
      case K::Var: return mixHash(h, var(m.name()));
      case K::Lam: {
        h = mixHash(h, detail::alphaHashType(m.type(), types));
        terms.push_back(m.name());
        h = mixHash(h, go(m.child(0)));
        terms.pop_back();
        return h;
      }
      case K::Case: {
        h = mixHash(h, go(m.child(0)));
        terms.push_back(m.name());
        h = mixHash(h, go(m.child(1)));
        terms.back() = m.name2();
        h = mixHash(h, go(m.child(2)));
        terms.pop_back();
        return h;
      }
      case K::TyLam: {
        types.push_back(m.name());
        h = mixHash(h, go(m.child(0)));
        types.pop_back();
        return h;
      }
      case K::Unpack: {
        h = mixHash(h, go(m.child(0)));
        types.push_back(m.name());
        terms.push_back(m.name2());
        h = mixHash(h, go(m.child(1)));
        types.pop_back();
        terms.pop_back();
        return h;
      }
      case K::Pack:
        h = mixHash(h, detail::alphaHashType(m.type2(), types));
        [[fallthrough]];
      case K::Inj1:
      case K::Inj2:
      case K::Eps:
      case K::TyApp:
        h = mixHash(h, detail::alphaHashType(m.type(), types));
        [[fallthrough]];
      default:
        for (std::size_t i = 0; i < m.arity(); ++i) h = mixHash(h, go(m.child(i)));
        return h;
    }
  }
};

}  // namespace

bool alphaEq(const Term& a, const Term& b) {
  if (a.sameNode(b)) return true;
  AlphaCmp c;
  return c.go(a, b);
}

std::size_t alphaHash(const Term& m) {
  AlphaHasher h;
  return h.go(m);
}

std::size_t size(const Term& m) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m.arity(); ++i) n += size(m.child(i));
  return n;
}

const Term& subtermAt(const Term& m, const Path& path) {
  const Term* cur = &m;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->arity()) throw std::out_of_range("path does not address a subterm");
    cur = &cur->child(static_cast<std::size_t>(i));
  }
  return *cur;
}

namespace {

Term replaceGo(const Term& m, const Path& path, std::size_t depth, const Term& r) {
  if (depth == path.size()) return r;
  auto i = static_cast<std::size_t>(path[depth]);
  if (path[depth] < 0 || i >= m.arity()) throw std::out_of_range("path does not address a subterm");
  return m.withChild(i, replaceGo(m.child(i), path, depth + 1, r));
}

}  // namespace

Term replaceAt(const Term& m, const Path& path, const Term& replacement) {
  return replaceGo(m, path, 0, replacement);
}

// ---------------------------------------------------------------------------
// Renaming apart

namespace {

void collectQuantifierBinders(const Type& t, NameSet& out) {
  switch (t.kind()) {
    case Type::Kind::Atom:
    case Type::Kind::Bot: return;
    case Type::Kind::Forall:
    case Type::Kind::Exists:
      out.insert(t.name());
      collectQuantifierBinders(t.body(), out);
      return;
    default:
      collectQuantifierBinders(t.dom(), out);
      collectQuantifierBinders(t.cod(), out);
  }
}

void collectQuantifierBinders(const Term& m, NameSet& out) {
  if (hasAnnotation(m.kind())) collectQuantifierBinders(m.type(), out);
  if (m.is(K::Pack)) collectQuantifierBinders(m.type2(), out);
  for (std::size_t i = 0; i < m.arity(); ++i) collectQuantifierBinders(m.child(i), out);
}

using Renaming = std::vector<std::pair<std::string, std::string>>;

const std::string* lookupRenaming(const Renaming& r, const std::string& x) {
  for (auto it = r.rbegin(); it != r.rend(); ++it)
    if (it->first == x) return &it->second;
  return nullptr;
}

Type renameType(const Type& t, const Renaming& r, std::vector<std::string>& shadow) {
  switch (t.kind()) {
    case Type::Kind::Atom: {
      for (const auto& s : shadow)
        if (s == t.name()) return t;
      const std::string* to = lookupRenaming(r, t.name());
      return to && *to != t.name() ? Type::atom(*to) : t;
    }
    case Type::Kind::Bot: return t;
    case Type::Kind::Forall:
    case Type::Kind::Exists: {
      shadow.push_back(t.name());
      Type b = renameType(t.body(), r, shadow);
      shadow.pop_back();
      if (b.sameNode(t.body())) return t;
      return t.is(Type::Kind::Forall) ? Type::forall(t.name(), b) : Type::exists(t.name(), b);
    }
    default: {
      Type a = renameType(t.dom(), r, shadow);
      Type b = renameType(t.cod(), r, shadow);
      if (a.sameNode(t.dom()) && b.sameNode(t.cod())) return t;
      if (t.is(Type::Kind::Arrow)) return Type::arrow(a, b);
      if (t.is(Type::Kind::And)) return Type::conj(a, b);
      return Type::disj(a, b);
    }
  }
}

struct Renamer {
  NameSet used;
  Renaming terms;
  Renaming types;

  std::string pick(const std::string& old) {
    std::string n = freshName(old, used);
    used.insert(n);
    return n;
  }

  Type ty(const Type& t) {
    std::vector<std::string> shadow;
    return renameType(t, types, shadow);
  }

  Term go(const Term& m) {
    switch (m.kind()) {
      case K::Var: {
        const std::string* to = lookupRenaming(terms, m.name());
        return to && *to != m.name() ? Term::var(*to) : m;
      }
      case K::Lam: {
        Type ann = ty(m.type());
        std::string x = pick(m.name());
        terms.emplace_back(m.name(), x);
        Term body = go(m.child(0));
        terms.pop_back();
        return Term::lam(x, ann, body);
      }
      case K::Case: {
        Term scrut = go(m.child(0));
        std::string x = pick(m.name());
        terms.emplace_back(m.name(), x);
        Term l = go(m.child(1));
        terms.pop_back();
        std::string y = pick(m.name2());
        terms.emplace_back(m.name2(), y);
        Term r = go(m.child(2));
        terms.pop_back();
        return Term::caseOf(scrut, x, l, y, r);
      }
      case K::TyLam: {
        std::string p = pick(m.name());
        types.emplace_back(m.name(), p);
        Term body = go(m.child(0));
        types.pop_back();
        return Term::tyLam(p, body);
      }
      case K::Unpack: {
        Term scrut = go(m.child(0));
        std::string p = pick(m.name());
        std::string x = pick(m.name2());
        types.emplace_back(m.name(), p);
        terms.emplace_back(m.name2(), x);
        Term body = go(m.child(1));
        types.pop_back();
        terms.pop_back();
        return Term::unpack(scrut, p, x, body);
      }
      default: {
        Term out = m;
        if (hasAnnotation(m.kind())) out = retype(m, ty(m.type()), m.is(K::Pack) ? ty(m.type2()) : m.type2());
        for (std::size_t i = 0; i < m.arity(); ++i) out = out.withChild(i, go(m.child(i)));
        return out;
      }
    }
  }
};

}  // namespace

Term renameApart(const Term& m, const NameSet& avoid) {
  Renamer r;
  r.used = avoid;
  collectFreeVars(m, r.used);
  collectFreeTypeVars(m, r.used);
  collectQuantifierBinders(m, r.used);
  return r.go(m);
}

// ---------------------------------------------------------------------------
// Eliminators

Term applyEliminator(const Term& m, const Eliminator& e) {
  struct V {
    const Term& m;
    Term operator()(const ArgElim& a) const { return Term::app(m, a.arg); }
    Term operator()(const Pi1Elim&) const { return Term::proj1(m); }
    Term operator()(const Pi2Elim&) const { return Term::proj2(m); }
    Term operator()(const BranchesElim& b) const { return Term::caseOf(m, b.x, b.left, b.y, b.right); }
    Term operator()(const TyArgElim& t) const { return Term::tyApp(m, t.arg); }
    Term operator()(const UnpackElim& u) const { return Term::unpack(m, u.typeVar, u.termVar, u.body); }
    Term operator()(const EpsElim& e) const { return Term::eps(m, e.target); }
  };
  return std::visit(V{m}, e);
}

std::optional<std::pair<Term, Eliminator>> decompose(const Term& m) {
  switch (m.kind()) {
    case K::App: return std::pair<Term, Eliminator>{m.child(0), ArgElim{m.child(1)}};
    case K::Proj1: return std::pair<Term, Eliminator>{m.child(0), Pi1Elim{}};
    case K::Proj2: return std::pair<Term, Eliminator>{m.child(0), Pi2Elim{}};
    case K::Case:
      return std::pair<Term, Eliminator>{m.child(0), BranchesElim{m.name(), m.child(1), m.name2(), m.child(2)}};
    case K::TyApp: return std::pair<Term, Eliminator>{m.child(0), TyArgElim{m.type()}};
    case K::Unpack: return std::pair<Term, Eliminator>{m.child(0), UnpackElim{m.name(), m.name2(), m.child(1)}};
    case K::Eps: return std::pair<Term, Eliminator>{m.child(0), EpsElim{m.type()}};
    default: return std::nullopt;
  }
}

namespace {

// The eliminator applied to a placeholder variable outside every name used
// by the eliminator; lets eliminator queries reuse the term machinery.
Term withHole(const Eliminator& e) {
  NameSet names;
  collectAllNames(applyEliminator(Term::var("_"), e), names);
  return applyEliminator(Term::var(freshName("hole", names)), e);
}

}  // namespace

NameSet freeVars(const Eliminator& e) {
  Term t = withHole(e);
  NameSet fv = freeVars(t);
  fv.erase(subtermAt(t, {0}).name());
  return fv;
}

NameSet freeTypeVars(const Eliminator& e) { return freeTypeVars(withHole(e)); }

bool alphaEq(const Eliminator& a, const Eliminator& b) {
  if (a.index() != b.index()) return false;
  Term h = Term::var("_");
  return alphaEq(applyEliminator(h, a), applyEliminator(h, b));
}

const char* eliminatorName(const Eliminator& e) {
  static const char* names[] = {"Arg", "Pi1", "Pi2", "Branches", "TyArg", "UnpackBranch", "Epsilon"};
  return names[e.index()];
}

// ---------------------------------------------------------------------------
// Context

void Context::declare(const std::string& x, const Type& t) {
  for (const auto& [name, _] : vars_)
    if (name == x) throw std::invalid_argument("duplicate declaration of '" + x + "'");
  vars_.emplace_back(x, t);
}

const Type* Context::lookup(const std::string& x) const {
  for (auto it = vars_.rbegin(); it != vars_.rend(); ++it)
    if (it->first == x) return &it->second;
  return nullptr;
}

NameSet Context::allNames() const {
  NameSet out = typeVars_;
  for (const auto& [x, t] : vars_) {
    out.insert(x);
    collectAllNames(t, out);
  }
  return out;
}

}  // namespace fsn
