#include "fsn/ast_json.hpp"

#include <stdexcept>

namespace fsn {

using nlohmann::json;
using K = Term::Kind;
using TK = Type::Kind;

json toJson(const Type& t) {
  switch (t.kind()) {
    case TK::Atom: return {{"tag", "Atom"}, {"name", t.name()}};
    case TK::Bot: return {{"tag", "Bot"}};
    case TK::Arrow: return {{"tag", "Arrow"}, {"dom", toJson(t.dom())}, {"cod", toJson(t.cod())}};
    case TK::And: return {{"tag", "And"}, {"left", toJson(t.left())}, {"right", toJson(t.right())}};
    case TK::Or: return {{"tag", "Or"}, {"left", toJson(t.left())}, {"right", toJson(t.right())}};
    case TK::Forall: return {{"tag", "Forall"}, {"binder", t.name()}, {"body", toJson(t.body())}};
    case TK::Exists: return {{"tag", "Exists"}, {"binder", t.name()}, {"body", toJson(t.body())}};
  }
  return nullptr;
}

json toJson(const Term& m) {
  auto c = [&](std::size_t i) { return toJson(m.child(i)); };
  switch (m.kind()) {
    case K::Var: return {{"tag", "Var"}, {"name", m.name()}};
    case K::Lam: return {{"tag", "Lam"}, {"var", m.name()}, {"ann", toJson(m.type())}, {"body", c(0)}};
    case K::App: return {{"tag", "App"}, {"fun", c(0)}, {"arg", c(1)}};
    case K::Pair: return {{"tag", "Pair"}, {"left", c(0)}, {"right", c(1)}};
    case K::Proj1: return {{"tag", "Proj1"}, {"t", c(0)}};
    case K::Proj2: return {{"tag", "Proj2"}, {"t", c(0)}};
    case K::Inj1: return {{"tag", "Inj1"}, {"t", c(0)}, {"sumAnn", toJson(m.type())}};
    case K::Inj2: return {{"tag", "Inj2"}, {"t", c(0)}, {"sumAnn", toJson(m.type())}};
    case K::Case:
      return {{"tag", "Case"},      {"scrut", c(0)},          {"xBinder", m.name()},
              {"leftBody", c(1)},   {"yBinder", m.name2()},   {"rightBody", c(2)}};
    case K::Eps: return {{"tag", "Eps"}, {"t", c(0)}, {"targetAnn", toJson(m.type())}};
    case K::TyLam: return {{"tag", "TyLam"}, {"typeVar", m.name()}, {"body", c(0)}};
    case K::TyApp: return {{"tag", "TyApp"}, {"t", c(0)}, {"typeArg", toJson(m.type())}};
    case K::Pack:
      return {{"tag", "Pack"}, {"witness", toJson(m.type())}, {"t", c(0)}, {"exAnn", toJson(m.type2())}};
    case K::Unpack:
      return {{"tag", "Unpack"},
              {"scrut", c(0)},
              {"typeVarBinder", m.name()},
              {"termVarBinder", m.name2()},
              {"body", c(1)}};
  }
  return nullptr;
}

json toJson(const Context& ctx) {
  json vars = json::array();
  for (const auto& [x, t] : ctx.vars()) vars.push_back({{"name", x}, {"type", toJson(t)}});
  json tvs = json::array();
  for (const auto& p : ctx.typeVars()) tvs.push_back(p);
  return {{"termVars", vars}, {"typeVars", tvs}};
}

json toJson(const Program& p) { return {{"context", toJson(p.ctx)}, {"term", toJson(p.term)}}; }

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string str(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) throw std::invalid_argument(std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

}  // namespace

Type typeFromJson(const json& j) {
  std::string tag = str(j, "tag");
  auto sub = [&](const char* n) { return typeFromJson(field(j, n)); };
  if (tag == "Atom") return Type::atom(str(j, "name"));
  if (tag == "Bot") return Type::bot();
  if (tag == "Arrow") return Type::arrow(sub("dom"), sub("cod"));
  if (tag == "And") return Type::conj(sub("left"), sub("right"));
  if (tag == "Or") return Type::disj(sub("left"), sub("right"));
  if (tag == "Forall") return Type::forall(str(j, "binder"), sub("body"));
  if (tag == "Exists") return Type::exists(str(j, "binder"), sub("body"));
  throw std::invalid_argument("unknown type tag '" + tag + "'");
}

Term termFromJson(const json& j) {
  std::string tag = str(j, "tag");
  auto sub = [&](const char* n) { return termFromJson(field(j, n)); };
  auto ty = [&](const char* n) { return typeFromJson(field(j, n)); };
  if (tag == "Var") return Term::var(str(j, "name"));
  if (tag == "Lam") return Term::lam(str(j, "var"), ty("ann"), sub("body"));
  if (tag == "App") return Term::app(sub("fun"), sub("arg"));
  if (tag == "Pair") return Term::pair(sub("left"), sub("right"));
  if (tag == "Proj1") return Term::proj1(sub("t"));
  if (tag == "Proj2") return Term::proj2(sub("t"));
  if (tag == "Inj1") return Term::inj1(sub("t"), ty("sumAnn"));
  if (tag == "Inj2") return Term::inj2(sub("t"), ty("sumAnn"));
  if (tag == "Case")
    return Term::caseOf(sub("scrut"), str(j, "xBinder"), sub("leftBody"), str(j, "yBinder"), sub("rightBody"));
  if (tag == "Eps") return Term::eps(sub("t"), ty("targetAnn"));
  if (tag == "TyLam") return Term::tyLam(str(j, "typeVar"), sub("body"));
  if (tag == "TyApp") return Term::tyApp(sub("t"), ty("typeArg"));
  if (tag == "Pack") return Term::pack(ty("witness"), sub("t"), ty("exAnn"));
  if (tag == "Unpack") return Term::unpack(sub("scrut"), str(j, "typeVarBinder"), str(j, "termVarBinder"), sub("body"));
  throw std::invalid_argument("unknown term tag '" + tag + "'");
}

Context contextFromJson(const json& j) {
  Context ctx;
  if (j.contains("typeVars"))
    for (const auto& p : field(j, "typeVars")) ctx.bindTypeVar(p.get<std::string>());
  if (j.contains("termVars"))
    for (const auto& v : field(j, "termVars")) ctx.declare(str(v, "name"), typeFromJson(field(v, "type")));
  return ctx;
}

Program programFromJson(const json& j) {
  Program p{Context{}, termFromJson(field(j, "term"))};
  if (j.contains("context")) p.ctx = contextFromJson(j.at("context"));
  return p;
}

}  // namespace fsn
