#pragma once

#include <cstddef>
#include <vector>

#include "fsn/term.hpp"

namespace fsn {

// Reduction in the target calculi: β always, type-level β for F∀,→, and
// optionally η (λx. M x → M with x ∉ FV(M)).
struct TargetRules {
  bool eta = false;
};

// Every one-step reduct of `m`, in preorder of the contracted redex.
std::vector<Term> targetReducts(const Term& m, TargetRules rules);

enum class ReachOutcome {
  Found,             // reached in `steps` ≥ 1 steps
  Identical,         // source and target already α-equal: zero steps
  NotReachable,      // the reduction graph was exhausted without a match
  DepthCapExceeded,  // depth cap or state budget hit before a match
};

const char* reachOutcomeName(ReachOutcome o);

struct ReachResult {
  ReachOutcome outcome = ReachOutcome::NotReachable;
  std::size_t steps = 0;
  std::size_t states = 0;

  bool found() const { return outcome == ReachOutcome::Found; }
};

struct SearchLimits {
  std::size_t depthCap = 64;
  std::size_t stateBudget = 20000;
};

// Breadth-first search for `to` from `from`, modulo α-equivalence.
ReachResult reachable(const Term& from, const Term& to, TargetRules rules, SearchLimits limits);

// As `reachable`, but first searches inside the smallest subterm where the
// two terms differ, and from there leaves untouched any subterm that also
// occurs in the goal. Falls back to the plain search.
ReachResult reachableFocused(const Term& from, const Term& to, TargetRules rules, SearchLimits limits);

}  // namespace fsn
