#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fsn {

using NameSet = std::set<std::string>;

// Type expressions of the full polymorphic calculus. The simply-typed
// fragment is the quantifier-free part. Free atoms are constants; an atom
// whose name matches an enclosing Forall/Exists binder is a bound variable.
//
// Values are immutable handles onto shared nodes; copying is cheap.
class Type {
 public:
  enum class Kind : std::uint8_t { Atom, Bot, Arrow, And, Or, Forall, Exists };

  Type();  // ⊥

  static Type atom(std::string name);
  static Type bot();
  static Type arrow(Type dom, Type cod);
  static Type conj(Type left, Type right);
  static Type disj(Type left, Type right);
  static Type forall(std::string binder, Type body);
  static Type exists(std::string binder, Type body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool isQuantifier() const { return is(Kind::Forall) || is(Kind::Exists); }

  // Atom name, or the binder of a quantifier.
  const std::string& name() const;
  // Arrow: dom/cod. And/Or: left/right. Quantifiers: body.
  const Type& dom() const;
  const Type& cod() const;
  const Type& left() const { return dom(); }
  const Type& right() const { return cod(); }
  const Type& body() const { return dom(); }

  bool sameNode(const Type& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  explicit Type(std::nullptr_t) {}
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  Kind kind = Kind::Bot;
  std::string name;
  Type a{nullptr};
  Type b{nullptr};
};

NameSet freeTypeVars(const Type& t);
void collectFreeTypeVars(const Type& t, NameSet& out);
bool occursFreeIn(const std::string& p, const Type& t);

// Capture-avoiding t[p := s].
Type substType(const Type& t, const std::string& p, const Type& s);

bool alphaEq(const Type& a, const Type& b);
std::size_t alphaHash(const Type& t);
std::size_t size(const Type& t);

// Deterministic fresh name: `base` itself when unused, otherwise the base
// with its numeric suffix stripped plus the smallest unused positive suffix.
std::string freshName(std::string_view base, const NameSet& avoid);

namespace detail {

// Scoped binder correspondence used by α-comparison of types and terms.
struct BinderPairs {
  std::vector<std::pair<std::string, std::string>> pairs;

  // true iff `a` on the left and `b` on the right resolve to the same
  // binder, or are both free and equal.
  bool match(const std::string& a, const std::string& b) const;
};

bool alphaEqTypes(const Type& a, const Type& b, BinderPairs& env);
std::size_t alphaHashType(const Type& t, std::vector<std::string>& bound);

}  // namespace detail

inline Type::Kind Type::kind() const { return node_->kind; }
inline const std::string& Type::name() const { return node_->name; }
inline const Type& Type::dom() const { return node_->a; }
inline const Type& Type::cod() const { return node_->b; }

}  // namespace fsn
