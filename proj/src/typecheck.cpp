#include "fsn/typecheck.hpp"

namespace fsn {

using K = Term::Kind;
using TK = Type::Kind;

const char* calculusName(CalculusId c) {
  switch (c) {
    case CalculusId::LambdaFull: return "lambda";
    case CalculusId::FFull: return "f";
    case CalculusId::LambdaArrow: return "lambda-arrow";
    case CalculusId::FArrow: return "f-arrow";
  }
  return "?";
}

const char* typeErrorKindName(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::UnboundVariable: return "UnboundVariable";
    case TypeErrorKind::TypeMismatch: return "TypeMismatch";
    case TypeErrorKind::ExistentialEscape: return "ExistentialEscape";
    case TypeErrorKind::IllFormedAnnotation: return "IllFormedAnnotation";
    case TypeErrorKind::TypeVariableCapture: return "TypeVariableCapture";
  }
  return "?";
}

TypeError::TypeError(TypeErrorKind kind, Path path, const std::string& msg)
    : std::runtime_error(msg), kind_(kind), path_(std::move(path)) {}

namespace {

class Checker {
 public:
  explicit Checker(const Context& ctx) : base_(ctx) {}
  Checker(const Checker&) = delete;

  Type go(const Term& m) {
    switch (m.kind()) {
      case K::Var: {
        const Type* t = lookup(m.name());
        if (!t) fail(TypeErrorKind::UnboundVariable, "unbound variable '" + m.name() + "'");
        return *t;
      }
      case K::Lam: {
        Scope s(*this, m.name(), m.type());
        Type body = child(m, 0);
        return Type::arrow(m.type(), body);
      }
      case K::App: {
        Type f = child(m, 0);
        Type a = child(m, 1);
        if (!f.is(TK::Arrow)) fail(TypeErrorKind::TypeMismatch, "application of a non-function");
        if (!alphaEq(f.dom(), a)) fail(TypeErrorKind::TypeMismatch, "argument type does not match domain");
        return f.cod();
      }
      case K::Pair: return Type::conj(child(m, 0), child(m, 1));
      case K::Proj1:
      case K::Proj2: {
        Type p = child(m, 0);
        if (!p.is(TK::And)) fail(TypeErrorKind::TypeMismatch, "projection from a non-product");
        return m.is(K::Proj1) ? p.left() : p.right();
      }
      case K::Inj1:
      case K::Inj2: {
        if (!m.type().is(TK::Or)) fail(TypeErrorKind::IllFormedAnnotation, "injection annotation is not a sum type");
        Type t = child(m, 0);
        const Type& want = m.is(K::Inj1) ? m.type().left() : m.type().right();
        if (!alphaEq(t, want)) fail(TypeErrorKind::TypeMismatch, "injected term does not match the sum component");
        return m.type();
      }
      case K::Case: {
        Type s = child(m, 0);
        if (!s.is(TK::Or)) fail(TypeErrorKind::TypeMismatch, "case on a non-sum");
        Type l, r;
        {
          Scope sc(*this, m.name(), s.left());
          l = child(m, 1);
        }
        {
          Scope sc(*this, m.name2(), s.right());
          r = child(m, 2);
        }
        if (!alphaEq(l, r)) fail(TypeErrorKind::TypeMismatch, "case branches disagree");
        return l;
      }
      case K::Eps: {
        Type t = child(m, 0);
        if (!t.is(TK::Bot)) fail(TypeErrorKind::TypeMismatch, "ex falso on a term not of type _|_");
        return m.type();
      }
      case K::TyLam: {
        for (const auto& x : freeVars(m.child(0))) {
          const Type* t = lookup(x);
          if (t && occursFreeIn(m.name(), *t))
            fail(TypeErrorKind::TypeVariableCapture,
                 "type variable '" + m.name() + "' occurs free in the type of '" + x + "'");
        }
        Type body = child(m, 0);
        return Type::forall(m.name(), body);
      }
      case K::TyApp: {
        Type t = child(m, 0);
        if (!t.is(TK::Forall)) fail(TypeErrorKind::TypeMismatch, "type application of a non-polymorphic term");
        return substType(t.body(), t.name(), m.type());
      }
      case K::Pack: {
        const Type& ex = m.type2();
        if (!ex.is(TK::Exists)) fail(TypeErrorKind::IllFormedAnnotation, "pack annotation is not an existential type");
        Type t = child(m, 0);
        if (!alphaEq(t, substType(ex.body(), ex.name(), m.type())))
          fail(TypeErrorKind::IllFormedAnnotation, "packed term does not match the instantiated existential body");
        return ex;
      }
      case K::Unpack: {
        Type s = child(m, 0);
        if (!s.is(TK::Exists)) fail(TypeErrorKind::TypeMismatch, "unpack of a non-existential");
        const std::string& p = m.name();
        const std::string& x = m.name2();
        const Term& body = m.child(1);
        for (const auto& y : freeVars(body)) {
          if (y == x) continue;
          const Type* t = lookup(y);
          if (t && occursFreeIn(p, *t))
            fail(TypeErrorKind::ExistentialEscape,
                 "type variable '" + p + "' occurs free in the type of '" + y + "'");
        }
        Type opened = substType(s.body(), s.name(), Type::atom(p));
        Type result;
        {
          Scope sc(*this, x, opened);
          result = child(m, 1);
        }
        if (occursFreeIn(p, result))
          fail(TypeErrorKind::ExistentialEscape, "type variable '" + p + "' escapes in the result type");
        return result;
      }
    }
    fail(TypeErrorKind::TypeMismatch, "unknown term");
  }

 private:
  struct Scope {
    Checker& c;
    Scope(Checker& ch, const std::string& x, const Type& t) : c(ch) { c.stack_.emplace_back(x, t); }
    ~Scope() { c.stack_.pop_back(); }
  };

  // Local binders shadow the base context.
  const Type* lookup(const std::string& x) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
      if (it->first == x) return &it->second;
    return base_.lookup(x);
  }

  Type child(const Term& m, std::size_t i) {
    path_.push_back(static_cast<int>(i));
    Type t = go(m.child(i));
    path_.pop_back();
    return t;
  }

  [[noreturn]] void fail(TypeErrorKind k, const std::string& msg) { throw TypeError(k, path_, msg); }

  const Context& base_;
  std::vector<std::pair<std::string, Type>> stack_;
  Path path_;
};

}  // namespace

Type infer(const Context& ctx, const Term& m) {
  Checker c(ctx);
  return c.go(m);
}

bool typable(const Context& ctx, const Term& m) {
  try {
    infer(ctx, m);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

bool inFragment(const Type& t, CalculusId c) {
  switch (t.kind()) {
    case TK::Atom: return c != CalculusId::LambdaArrow;
    case TK::Bot: return true;
    case TK::Arrow: return inFragment(t.dom(), c) && inFragment(t.cod(), c);
    case TK::And:
    case TK::Or:
      return (c == CalculusId::LambdaFull || c == CalculusId::FFull) && inFragment(t.left(), c) &&
             inFragment(t.right(), c);
    case TK::Forall: return (c == CalculusId::FFull || c == CalculusId::FArrow) && inFragment(t.body(), c);
    case TK::Exists: return c == CalculusId::FFull && inFragment(t.body(), c);
  }
  return false;
}

bool inFragment(const Term& m, CalculusId c) {
  bool ok = false;
  switch (m.kind()) {
    case K::Var:
    case K::App: ok = true; break;
    case K::Lam: ok = inFragment(m.type(), c); break;
    case K::Pair:
    case K::Proj1:
    case K::Proj2:
    case K::Case: ok = c == CalculusId::LambdaFull || c == CalculusId::FFull; break;
    case K::Inj1:
    case K::Inj2:
    case K::Eps: ok = (c == CalculusId::LambdaFull || c == CalculusId::FFull) && inFragment(m.type(), c); break;
    case K::TyLam: ok = c == CalculusId::FFull || c == CalculusId::FArrow; break;
    case K::TyApp: ok = (c == CalculusId::FFull || c == CalculusId::FArrow) && inFragment(m.type(), c); break;
    case K::Pack: ok = c == CalculusId::FFull && inFragment(m.type(), c) && inFragment(m.type2(), c); break;
    case K::Unpack: ok = c == CalculusId::FFull; break;
  }
  if (!ok) return false;
  for (std::size_t i = 0; i < m.arity(); ++i)
    if (!inFragment(m.child(i), c)) return false;
  return true;
}

Context contextAt(const Context& ctx, const Term& m, const Path& path) {
  Context out = ctx;
  const Term* cur = &m;
  for (int i : path) {
    switch (cur->kind()) {
      case K::Lam: out.bind(cur->name(), cur->type()); break;
      case K::TyLam: out.bindTypeVar(cur->name()); break;
      case K::Case:
        if (i > 0) {
          Type s = infer(out, cur->child(0));
          if (!s.is(TK::Or)) throw TypeError(TypeErrorKind::TypeMismatch, path, "case on a non-sum");
          if (i == 1) out.bind(cur->name(), s.left());
          else out.bind(cur->name2(), s.right());
        }
        break;
      case K::Unpack:
        if (i == 1) {
          Type s = infer(out, cur->child(0));
          if (!s.is(TK::Exists)) throw TypeError(TypeErrorKind::TypeMismatch, path, "unpack of a non-existential");
          out.bindTypeVar(cur->name());
          out.bind(cur->name2(), substType(s.body(), s.name(), Type::atom(cur->name())));
        }
        break;
      default: break;
    }
    cur = &cur->child(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace fsn
