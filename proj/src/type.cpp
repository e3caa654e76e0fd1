#include "fsn/type.hpp"

#include <cctype>
#include <functional>

namespace fsn {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Type Type::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

Type Type::bot() {
  static const Type shared = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    return Type(std::shared_ptr<const Node>(std::move(n)));
  }();
  return shared;
}

Type::Type() : Type(bot()) {}

Type Type::arrow(Type dom, Type cod) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Arrow;
  n->a = std::move(dom);
  n->b = std::move(cod);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

Type Type::conj(Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->a = std::move(left);
  n->b = std::move(right);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

Type Type::disj(Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->a = std::move(left);
  n->b = std::move(right);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

Type Type::forall(std::string binder, Type body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->name = std::move(binder);
  n->a = std::move(body);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

Type Type::exists(std::string binder, Type body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->name = std::move(binder);
  n->a = std::move(body);
  return Type(std::shared_ptr<const Node>(std::move(n)));
}

namespace {

void collectFree(const Type& t, std::vector<std::string>& bound, NameSet& out) {
  switch (t.kind()) {
    case Type::Kind::Atom:
      for (const auto& b : bound)
        if (b == t.name()) return;
      out.insert(t.name());
      return;
    case Type::Kind::Bot:
      return;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or:
      collectFree(t.dom(), bound, out);
      collectFree(t.cod(), bound, out);
      return;
    case Type::Kind::Forall:
    case Type::Kind::Exists:
      bound.push_back(t.name());
      collectFree(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

Type rebuild(const Type& t, Type a, Type b) {
  switch (t.kind()) {
    case Type::Kind::Arrow: return Type::arrow(std::move(a), std::move(b));
    case Type::Kind::And: return Type::conj(std::move(a), std::move(b));
    case Type::Kind::Or: return Type::disj(std::move(a), std::move(b));
    case Type::Kind::Forall: return Type::forall(t.name(), std::move(a));
    case Type::Kind::Exists: return Type::exists(t.name(), std::move(a));
    default: return t;
  }
}

}  // namespace

void collectFreeTypeVars(const Type& t, NameSet& out) {
  std::vector<std::string> bound;
  collectFree(t, bound, out);
}

NameSet freeTypeVars(const Type& t) {
  NameSet out;
  collectFreeTypeVars(t, out);
  return out;
}

bool occursFreeIn(const std::string& p, const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Atom: return t.name() == p;
    case Type::Kind::Bot: return false;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or: return occursFreeIn(p, t.dom()) || occursFreeIn(p, t.cod());
    case Type::Kind::Forall:
    case Type::Kind::Exists: return t.name() != p && occursFreeIn(p, t.body());
  }
  return false;
}

namespace {

Type substGo(const Type& t, const std::string& p, const Type& s, const NameSet& fvS) {
  switch (t.kind()) {
    case Type::Kind::Atom: return t.name() == p ? s : t;
    case Type::Kind::Bot: return t;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or: {
      Type a = substGo(t.dom(), p, s, fvS);
      Type b = substGo(t.cod(), p, s, fvS);
      if (a.sameNode(t.dom()) && b.sameNode(t.cod())) return t;
      return rebuild(t, std::move(a), std::move(b));
    }
    case Type::Kind::Forall:
    case Type::Kind::Exists: {
      if (t.name() == p || !occursFreeIn(p, t.body())) return t;
      std::string q = t.name();
      Type body = t.body();
      if (fvS.count(q)) {
        NameSet avoid = fvS;
        collectFreeTypeVars(body, avoid);
        avoid.insert(p);
        std::string fresh = freshName(q, avoid);
        body = substType(body, q, Type::atom(fresh));
        q = fresh;
      }
      Type nb = substGo(body, p, s, fvS);
      return t.is(Type::Kind::Forall) ? Type::forall(q, std::move(nb)) : Type::exists(q, std::move(nb));
    }
  }
  return t;
}

}  // namespace

Type substType(const Type& t, const std::string& p, const Type& s) {
  if (!occursFreeIn(p, t)) return t;
  return substGo(t, p, s, freeTypeVars(s));
}

namespace detail {

bool BinderPairs::match(const std::string& a, const std::string& b) const {
  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    bool la = it->first == a;
    bool rb = it->second == b;
    if (la || rb) return la && rb;
  }
  return a == b;
}

bool alphaEqTypes(const Type& a, const Type& b, BinderPairs& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Type::Kind::Atom: return env.match(a.name(), b.name());
    case Type::Kind::Bot: return true;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or:
      return alphaEqTypes(a.dom(), b.dom(), env) && alphaEqTypes(a.cod(), b.cod(), env);
    case Type::Kind::Forall:
    case Type::Kind::Exists: {
      env.pairs.emplace_back(a.name(), b.name());
      bool r = alphaEqTypes(a.body(), b.body(), env);
      env.pairs.pop_back();
      return r;
    }
  }
  return false;
}

std::size_t alphaHashType(const Type& t, std::vector<std::string>& bound) {
  std::size_t h = static_cast<std::size_t>(t.kind()) * 31 + 7;
  switch (t.kind()) {
    case Type::Kind::Atom:
      for (std::size_t i = bound.size(); i-- > 0;)
        if (bound[i] == t.name()) return mix(h, bound.size() - i);
      return mix(h, std::hash<std::string>{}(t.name()));
    case Type::Kind::Bot: return h;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or:
      h = mix(h, alphaHashType(t.dom(), bound));
      return mix(h, alphaHashType(t.cod(), bound));
    case Type::Kind::Forall:
    case Type::Kind::Exists: {
      bound.push_back(t.name());
      h = mix(h, alphaHashType(t.body(), bound));
      bound.pop_back();
      return h;
    }
  }
  return h;
}

}  // namespace detail

bool alphaEq(const Type& a, const Type& b) {
  if (a.sameNode(b)) return true;
  detail::BinderPairs env;
  return detail::alphaEqTypes(a, b, env);
}

std::size_t alphaHash(const Type& t) {
  std::vector<std::string> bound;
  return detail::alphaHashType(t, bound);
}

std::size_t size(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Atom:
    case Type::Kind::Bot: return 1;
    case Type::Kind::Arrow:
    case Type::Kind::And:
    case Type::Kind::Or: return 1 + size(t.dom()) + size(t.cod());
    case Type::Kind::Forall:
    case Type::Kind::Exists: return 1 + size(t.body());
  }
  return 1;
}

std::string freshName(std::string_view base, const NameSet& avoid) {
  if (!base.empty() && !avoid.count(std::string(base))) return std::string(base);
  std::string stem(base);
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (unsigned i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace fsn
