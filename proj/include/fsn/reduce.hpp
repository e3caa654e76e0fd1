#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fsn/term.hpp"

namespace fsn {

// Seven β-rules followed by the 21 permutative conversions. A conversion
// C-X-Y moves the eliminator Y past (or into) an inner X ∈ {ε, case,
// unpack}.
enum class RuleId {
  BArrow, BPi1, BPi2, BCaseInl, BCaseInr, BUnpack, BTyApp,
  CEpsApp, CEpsPi1, CEpsPi2, CEpsCase, CEpsEps,
  CCaseApp, CCasePi1, CCasePi2, CCaseCase, CCaseEps,
  CCaseTyApp, CEpsTyApp, CUnpackTyApp,
  CCaseUnpack, CEpsUnpack, CUnpackUnpack,
  CUnpackApp, CUnpackPi1, CUnpackPi2, CUnpackCase, CUnpackEps,
};

inline constexpr std::size_t kRuleCount = 28;
inline constexpr std::size_t kBetaRuleCount = 7;
inline constexpr std::size_t kCommutativeRuleCount = 21;

const std::array<RuleId, kRuleCount>& allRules();
const char* ruleName(RuleId r);  // e.g. "C-EPS-APP"
std::optional<RuleId> parseRuleName(std::string_view name);
bool isCommutative(RuleId r);
inline std::size_t ruleIndex(RuleId r) { return static_cast<std::size_t>(r); }

struct ReductionStep {
  Path path;
  RuleId rule;

  bool operator==(const ReductionStep&) const = default;
};

enum class Strategy { LeftmostOutermost, RightmostInnermost, CommutationsFirst };

const char* strategyName(Strategy s);

// Redex kinds admitted during enumeration for normalization.
enum class RedexFilter { All, CommutationsOnly };

class InvalidStep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted(Term reached, std::vector<ReductionStep> trace);

  const Term& reached() const { return reached_; }
  const std::vector<ReductionStep>& trace() const { return trace_; }

 private:
  Term reached_;
  std::vector<ReductionStep> trace_;
};

// The rule whose left-hand side matches at the root of `m`, if any.
std::optional<RuleId> classify(const Term& m);

// All redex occurrences in preorder (outermost first, then left to right).
std::vector<ReductionStep> redexes(const Term& m);

// Contracts the redex at `s.path`. `ctx` types the free variables of `m`;
// it is consulted only when a conversion rebuilds an ε annotation from a
// branch type.
Term step(const Context& ctx, const Term& m, const ReductionStep& s);
Term step(const Term& m, const ReductionStep& s);

// The explicit 28-rule catalog applied at the root of `redex`. `env` types
// the free variables of `redex`.
Term contract(const Context& env, const Term& redex, RuleId rule);

// Commutative conversions derived from the three generic shapes
//   (W[x.S, y.T]) E  ⇝  W[x.S E, y.T E]
//   (A ε) E          ⇝  A ε
//   (M[x.P]) E       ⇝  M[x.P E]
// over an arbitrary eliminator E. Returns the matched rule and contractum,
// or nothing when `redex` has none of these shapes.
std::optional<std::pair<RuleId, Term>> contractByPattern(const Context& env, const Term& redex);

// Chooses the next step; nothing when `candidates` is empty.
std::optional<ReductionStep> choose(const std::vector<ReductionStep>& candidates, Strategy strat);

struct Normalized {
  Term term;
  std::vector<ReductionStep> trace;
};

inline constexpr std::size_t kDefaultFuel = 100000;

// Reduces until no (filtered) redex remains. Throws FuelExhausted after
// `fuel` steps.
Normalized normalize(const Context& ctx, const Term& m, Strategy strat, std::size_t fuel = kDefaultFuel,
                     RedexFilter filter = RedexFilter::All);

std::string pathToString(const Path& p);  // "root" or "0.1.2"
std::optional<Path> parsePath(std::string_view text);

}  // namespace fsn
