#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fsn/generator.hpp"
#include "fsn/reduce.hpp"

namespace fsn {

enum class CheckId {
  SoundnessSimple,
  SoundnessCps,
  SimSimple,
  SimCpsBeta,
  CpsCommutative,
  ChiDecrease,
  SubjectReduction,
  Normalization,
  StrategyAgreement,
  SubstitutionLemmas,
  Roundtrip,
  PatternFaithfulness,
};

inline constexpr std::size_t kCheckCount = 12;

const std::array<CheckId, kCheckCount>& allChecks();
const char* checkName(CheckId c);  // e.g. "sim-simple"
std::optional<CheckId> parseCheckName(std::string_view name);
// Parses a comma-separated list; "all" selects every check.
std::set<CheckId> parseCheckList(std::string_view list);

struct SuiteOptions {
  std::set<CheckId> checks;
  bool includeWitnesses = true;
  std::size_t threads = 1;
  std::size_t fuel = kDefaultFuel;
  std::size_t stateBudget = 20000;
  // Reduction steps examined per term: every redex of the term itself plus
  // up to this many steps along its leftmost-outermost normalization.
  std::size_t traceSteps = 32;
  std::size_t maxFailuresKept = 25;
  bool shrink = true;
};

struct CheckStats {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t total() const { return pass + fail; }
};

struct FailureRecord {
  CheckId check;
  std::string subject;  // "term 17" or "witness C-EPS-APP"
  std::string detail;
  std::string program;  // shrunk counterexample in surface syntax
};

struct CheckRecord {
  std::string subject;
  CheckId check;
  bool passed;
  std::size_t instances;  // sub-checks run (steps, strategies, equations)
  std::size_t failed;
};

struct SuiteReport {
  CalculusId calculus = CalculusId::LambdaFull;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t subjects = 0;
  std::size_t stepsChecked = 0;

  // Per check: subjects passing / failing.
  std::map<CheckId, CheckStats> perSubject;
  // Per check: individual instances (steps, strategy runs, equations).
  std::map<CheckId, CheckStats> perInstance;
  // Per step-based check and rule: failing instances.
  std::map<CheckId, std::array<std::size_t, kRuleCount>> ruleFailures;
  // Failing step instances per (rule, reason); for the simulation checks
  // the reason is the search outcome.
  std::map<CheckId, std::map<std::string, std::size_t>> failureReasons;
  // Steps examined, by rule; sums to stepsChecked.
  std::array<std::size_t, kRuleCount> coverage{};
  // Substitution equations holding with plain α-equality, by equation.
  std::array<std::size_t, 6> substExact{};
  std::array<std::size_t, 6> substHolds{};
  std::size_t substInstances = 0;

  std::vector<FailureRecord> failures;
  std::vector<CheckRecord> records;

  bool passed(CheckId c) const;
  bool allPassed() const;
  std::string toText() const;
  nlohmann::json toJson() const;
};

SuiteReport runSuite(const GenConfig& cfg, std::size_t count, const SuiteOptions& opts);

}  // namespace fsn
