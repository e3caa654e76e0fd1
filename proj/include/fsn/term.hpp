#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fsn/type.hpp"

namespace fsn {

// Church-style terms of the full polymorphic calculus.
//
// Child order (used by paths):
//   Lam [body]            App [fun, arg]          Pair [left, right]
//   Proj1/Proj2 [t]       Inj1/Inj2 [t]           Case [scrut, left, right]
//   Eps [t]               TyLam [body]            TyApp [t]
//   Pack [t]              Unpack [scrut, body]
class Term {
 public:
  enum class Kind : std::uint8_t {
    Var, Lam, App, Pair, Proj1, Proj2, Inj1, Inj2, Case, Eps, TyLam, TyApp, Pack, Unpack
  };

  static Term var(std::string name);
  static Term lam(std::string x, Type ann, Term body);
  static Term app(Term fun, Term arg);
  static Term pair(Term left, Term right);
  static Term proj1(Term t);
  static Term proj2(Term t);
  static Term inj1(Term t, Type sumAnn);
  static Term inj2(Term t, Type sumAnn);
  static Term caseOf(Term scrut, std::string x, Term left, std::string y, Term right);
  static Term eps(Term t, Type target);
  static Term tyLam(std::string p, Term body);
  static Term tyApp(Term t, Type arg);
  static Term pack(Type witness, Term t, Type exAnn);
  static Term unpack(Term scrut, std::string p, std::string x, Term body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Var: variable. Lam: bound variable. Case: left binder. TyLam and
  // Unpack: bound type variable.
  const std::string& name() const;
  // Case: right binder. Unpack: bound term variable.
  const std::string& name2() const;
  // Lam: annotation. Inj: sum type. Eps: target. TyApp: argument.
  // Pack: witness.
  const Type& type() const;
  // Pack: existential annotation.
  const Type& type2() const;

  std::size_t arity() const;
  const Term& child(std::size_t i) const;

  // Same node with child `i` replaced.
  Term withChild(std::size_t i, Term c) const;

  bool sameNode(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  explicit Term(std::nullptr_t) {}
  static Term make(Kind k, std::string name, std::string name2, Type ty, Type ty2,
                   std::initializer_list<Term> kids);
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind = Kind::Var;
  std::string name;
  std::string name2;
  Type ty;
  Type ty2;
  std::uint8_t arity = 0;
  std::array<Term, 3> kids{Term(nullptr), Term(nullptr), Term(nullptr)};
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline const std::string& Term::name2() const { return node_->name2; }
inline const Type& Term::type() const { return node_->ty; }
inline const Type& Term::type2() const { return node_->ty2; }
inline std::size_t Term::arity() const { return node_->arity; }
inline const Term& Term::child(std::size_t i) const { return node_->kids[i]; }

const char* kindName(Term::Kind k);

bool isEliminatorKind(Term::Kind k);
bool isIntroductionKind(Term::Kind k);

// Sequence of child indices from the root.
using Path = std::vector<int>;

NameSet freeVars(const Term& m);
void collectFreeVars(const Term& m, NameSet& out);
bool occursFree(const std::string& x, const Term& m);
// Free type variables of all annotations, minus TyLam/Unpack binders.
NameSet freeTypeVars(const Term& m);
void collectFreeTypeVars(const Term& m, NameSet& out);
bool typeVarOccursFree(const std::string& p, const Term& m);
// Every identifier appearing anywhere (binders, variables, type names).
void collectAllNames(const Term& m, NameSet& out);
void collectAllNames(const Type& t, NameSet& out);

// Capture-avoiding m[x := n]; renames binders of m as needed.
Term substTerm(const Term& m, const std::string& x, const Term& n);
// Capture-avoiding m[p := s] over every annotation and type argument.
Term substTypeInTerm(const Term& m, const std::string& p, const Type& s);

bool alphaEq(const Term& a, const Term& b);
std::size_t alphaHash(const Term& m);

// Number of term nodes (annotations not counted).
std::size_t size(const Term& m);

const Term& subtermAt(const Term& m, const Path& path);
Term replaceAt(const Term& m, const Path& path, const Term& replacement);

// Renames every bound term and type variable so that binders are pairwise
// distinct and disjoint from `avoid` and from the free names of `m`.
Term renameApart(const Term& m, const NameSet& avoid);

// The eliminators that may follow a term: argument, projections, case
// branches, type argument, unpack branch and ex falso.
struct ArgElim {
  Term arg;
};
struct Pi1Elim {};
struct Pi2Elim {};
struct BranchesElim {
  std::string x;
  Term left;
  std::string y;
  Term right;
};
struct TyArgElim {
  Type arg;
};
struct UnpackElim {
  std::string typeVar;
  std::string termVar;
  Term body;
};
struct EpsElim {
  Type target;
};

using Eliminator =
    std::variant<ArgElim, Pi1Elim, Pi2Elim, BranchesElim, TyArgElim, UnpackElim, EpsElim>;

Term applyEliminator(const Term& m, const Eliminator& e);
// Splits an eliminator-rooted term into its scrutinee and eliminator.
std::optional<std::pair<Term, Eliminator>> decompose(const Term& m);

NameSet freeVars(const Eliminator& e);
NameSet freeTypeVars(const Eliminator& e);
bool alphaEq(const Eliminator& a, const Eliminator& b);
const char* eliminatorName(const Eliminator& e);

// Typing context: term variables in declaration order (later entries shadow
// earlier ones of the same name during traversal) and declared type
// variables.
class Context {
 public:
  Context() = default;

  // Adds a user declaration; rejects duplicates.
  void declare(const std::string& x, const Type& t);
  // Pushes a binding that may shadow an earlier one.
  void bind(const std::string& x, const Type& t) { vars_.emplace_back(x, t); }
  // Drops the most recent binding.
  void unbind() { vars_.pop_back(); }
  void bindTypeVar(const std::string& p) { typeVars_.insert(p); }

  const Type* lookup(const std::string& x) const;
  bool contains(const std::string& x) const { return lookup(x) != nullptr; }

  const std::vector<std::pair<std::string, Type>>& vars() const { return vars_; }
  const NameSet& typeVars() const { return typeVars_; }

  // Names of all term and type variables plus free type names of the
  // declared types.
  NameSet allNames() const;

 private:
  std::vector<std::pair<std::string, Type>> vars_;
  NameSet typeVars_;
};

}  // namespace fsn
