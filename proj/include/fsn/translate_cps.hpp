#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "fsn/reduce.hpp"
#include "fsn/search.hpp"
#include "fsn/translate_simple.hpp"

namespace fsn {

// Call-by-name CPS translation of the full polymorphic calculus into F∀,→.
// Atoms and ⊥ are kept; trf τ = (τ* → ⊥) → ⊥.
Type starType(const Type& t);
Type trfType(const Type& t);

// M ◇ K for M well typed under `ctx`; K has type τ* → ⊥ where τ is M's type.
Term diamond(const Context& ctx, const Term& m, const Term& k);
// E @ K, where the eliminated term has type `scrutType` under `ctx`.
Term at(const Context& ctx, const Type& scrutType, const Eliminator& e, const Term& k);
// trf M = λk. M ◇ k.
Term trfTerm(const Context& ctx, const Term& m);
// x : σ becomes x : trf σ; declared type variables are kept.
Context trfContext(const Context& ctx);

// Whether trf(step(m, s)) is reachable from trf(m) by at least one β-step.
SimulationResult checkSimulationCpsBeta(const Context& ctx, const Term& m, const ReductionStep& s,
                                        std::optional<std::size_t> depthCap = std::nullopt,
                                        std::size_t stateBudget = 20000);

struct CommutationResult {
  Term before;
  Term after;
  bool equal;
};

// trf of both sides of a commutative step, compared up to α.
CommutationResult checkCpsCommutative(const Context& ctx, const Term& m, const ReductionStep& s);

// One instance of the six substitution equations
//   1. trf R [x := trf N]      = trf (R[x := N])
//   2. (R ◇ K)[x := trf N]     = R[x := N] ◇ K[x := trf N]
//   3. (E @ K)[x := trf N]     = E[x := N] @ K[x := trf N]
//   4. trf τ [p := ρ*]         = trf (τ[p := ρ])
//   5. (R ◇ K)[p := ρ*]        = R[p := ρ] ◇ K[p := ρ*]
//   6. (E @ K)[p := ρ*]        = E[p := ρ] @ K[p := ρ*]
struct SubstInstance {
  Context ctx;      // types every free variable, including x; declares p
  Term r;           // source term
  Term k;           // continuation for R, in the translated context
  Eliminator e;     // source eliminator
  Type eScrut;      // type of the term E eliminates
  Term ek;          // continuation for E
  std::string x;
  Term n;           // n has the type of x and does not mention x
  std::string p;
  Type rho;
  Type tau;
};

struct SubstReport {
  // Equations 1–3 compared after contracting every application headed by
  // trf N, on both sides; equations 4–6 compared directly.
  std::array<bool, 6> holds{};
  // Plain α-equality without any contraction.
  std::array<bool, 6> exact{};

  bool all() const;
};

SubstReport checkSubstitutionLemmas(const SubstInstance& inst);

}  // namespace fsn
