#pragma once

#include <stdexcept>
#include <string>

#include "fsn/term.hpp"

namespace fsn {

enum class CalculusId {
  LambdaFull,   // ∧ ∨ → ⊥, no quantifiers
  FFull,        // ∧ ∨ → ⊥ ∀ ∃
  LambdaArrow,  // → over the single atom ⊥
  FArrow,       // → and ∀
};

const char* calculusName(CalculusId c);

enum class TypeErrorKind {
  UnboundVariable,
  TypeMismatch,
  ExistentialEscape,
  IllFormedAnnotation,
  // Λp M where p occurs free in the type of a free variable of M.
  TypeVariableCapture,
};

const char* typeErrorKindName(TypeErrorKind k);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorKind kind, Path path, const std::string& msg);

  TypeErrorKind kind() const { return kind_; }
  // Location of the offending node, as child indices from the root.
  const Path& path() const { return path_; }

 private:
  TypeErrorKind kind_;
  Path path_;
};

// Synthesizes the type of `m` under `ctx`. Type equality is α-equivalence.
Type infer(const Context& ctx, const Term& m);

// Whether `m` is typable under `ctx`.
bool typable(const Context& ctx, const Term& m);

bool inFragment(const Term& m, CalculusId c);
bool inFragment(const Type& t, CalculusId c);

// `ctx` extended with the binders crossed on the way from the root of `m`
// to the node at `path`. Case binders get the scrutinee's component types,
// Unpack binders the opened existential body.
Context contextAt(const Context& ctx, const Term& m, const Path& path);

}  // namespace fsn
