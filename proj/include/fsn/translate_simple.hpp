#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fsn/reduce.hpp"
#include "fsn/search.hpp"

namespace fsn {

class NotSimplyTyped : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotTargetType : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// σ₁ → … → σₙ → ⊥.
struct ArrowSpine {
  std::vector<Type> args;
  Type final;
};

// Types of λ∧∨→⊥ into λ→ over the single atom ⊥; every atom becomes ⊥.
Type trType(const Type& t);
ArrowSpine spine(const Type& t);
Type fromSpine(const ArrowSpine& s);

Term trTerm(const Context& ctx, const Term& m);
Context trContext(const Context& ctx);

struct SimulationResult {
  ReachResult reach;
  Term before;  // translation of the redex-containing term
  Term after;   // translation of the contractum

  bool ok() const { return reach.found(); }
};

std::size_t defaultDepthCap(const Term& translated);

// Whether tr(step(m, s)) is reachable from tr(m) by at least one βη-step.
SimulationResult checkSimulationSimple(const Context& ctx, const Term& m, const ReductionStep& s,
                                       std::optional<std::size_t> depthCap = std::nullopt,
                                       std::size_t stateBudget = 20000);

}  // namespace fsn
