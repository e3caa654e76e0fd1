// Runs the ten acceptance criteria and prints one verdict line for each.
// Exit status is 0 once every criterion has been evaluated; pass --strict to
// make any FAIL verdict a non-zero exit.
#include <chrono>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "fsn/harness.hpp"
#include "fsn/reduce.hpp"
#include "fsn/syntax.hpp"
#include "fsn/translate_simple.hpp"
#include "fsn/witnesses.hpp"

using namespace fsn;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

thread_local std::string notes;

GenConfig config(CalculusId c, std::uint64_t seed) {
  GenConfig cfg;
  cfg.calculus = c;
  cfg.maxSize = 30;
  cfg.seed = seed;
  return cfg;
}

SuiteReport suite(CalculusId c, std::uint64_t seed, std::size_t count, std::set<CheckId> checks, bool witnesses) {
  SuiteOptions opts;
  opts.checks = std::move(checks);
  opts.includeWitnesses = witnesses;
  opts.maxFailuresKept = 3;
  return runSuite(config(c, seed), count, opts);
}

std::string counts(const SuiteReport& r, CheckId c) {
  const CheckStats& s = r.perInstance.at(c);
  std::ostringstream out;
  out << checkName(c) << " " << s.pass << "/" << s.total();
  return out.str();
}

std::string ruleBreakdown(const SuiteReport& r, CheckId c) {
  std::ostringstream out;
  auto it = r.ruleFailures.find(c);
  if (it == r.ruleFailures.end()) return "";
  for (std::size_t k = 0; k < kRuleCount; ++k)
    if (it->second[k]) out << " " << ruleName(static_cast<RuleId>(k)) << "x" << it->second[k];
  return out.str();
}

void firstFailure(const SuiteReport& r) {
  std::ostringstream out;
  for (const auto& [c, reasons] : r.failureReasons)
    for (const auto& [why, n] : reasons) out << "    " << checkName(c) << " " << why << ": " << n << "\n";
  if (!r.failures.empty()) {
    const auto& f = r.failures.front();
    out << "    e.g. " << f.subject << ": " << f.detail << "\n";
    std::istringstream lines(f.program);
    for (std::string line; std::getline(lines, line);) out << "      " << line << "\n";
  }
  notes += out.str();
}

Verdict c1() {
  std::string got = print(trType(parseType("p -> q -> p /\\ q")));
  std::string want = "_|_ -> _|_ -> (_|_ -> _|_ -> _|_) -> _|_";
  return {got == want, got};
}

Verdict c2() {
  SuiteReport r = suite(CalculusId::FFull, 1, 0, {CheckId::SubjectReduction}, true);
  std::size_t covered = 0, fired = 0;
  for (std::size_t k = 0; k < kRuleCount; ++k) covered += r.coverage[k] > 0;
  for (const Witness& w : witnesses()) {
    auto rs = redexes(w.program.term);
    bool ok = rs.size() == 1 && rs[0] == ReductionStep{{}, w.rule};
    try {
      step(w.program.ctx, w.program.term, rs.at(0));
    } catch (const std::exception&) {
      ok = false;
    }
    fired += ok;
  }
  std::ostringstream d;
  d << "witnesses firing their rule " << fired << "/" << kRuleCount << ", coverage " << covered << "/" << kRuleCount;
  return {fired == kRuleCount && covered == kRuleCount && r.passed(CheckId::SubjectReduction), d.str()};
}

Verdict c3() {
  std::set<CheckId> checks{CheckId::SoundnessSimple, CheckId::SoundnessCps};
  SuiteReport lam = suite(CalculusId::LambdaFull, 301, 1000, checks, false);
  SuiteReport f = suite(CalculusId::FFull, 302, 1000, checks, false);
  bool ok = lam.passed(CheckId::SoundnessSimple) && lam.passed(CheckId::SoundnessCps) &&
            f.passed(CheckId::SoundnessSimple) && f.passed(CheckId::SoundnessCps) &&
            lam.perSubject.at(CheckId::SoundnessSimple).total() == 1000 &&
            f.perSubject.at(CheckId::SoundnessCps).total() == 1000;
  firstFailure(lam);
  firstFailure(f);
  return {ok, "lambda: " + counts(lam, CheckId::SoundnessSimple) + ", " + counts(lam, CheckId::SoundnessCps) +
                  "; F: " + counts(f, CheckId::SoundnessCps) + ", " + counts(f, CheckId::SoundnessSimple)};
}

Verdict c4() {
  SuiteReport r = suite(CalculusId::LambdaFull, 401, 300, {CheckId::SimSimple}, false);
  firstFailure(r);
  return {r.passed(CheckId::SimSimple) && r.perSubject.at(CheckId::SimSimple).total() > 0,
          counts(r, CheckId::SimSimple) + " steps; failing rules:" + ruleBreakdown(r, CheckId::SimSimple)};
}

Verdict c5() {
  SuiteReport r = suite(CalculusId::FFull, 501, 300, {CheckId::SimCpsBeta}, false);
  firstFailure(r);
  return {r.passed(CheckId::SimCpsBeta) && r.perSubject.at(CheckId::SimCpsBeta).total() > 0,
          counts(r, CheckId::SimCpsBeta) + " beta steps; failing rules:" + ruleBreakdown(r, CheckId::SimCpsBeta)};
}

Verdict c6() {
  SuiteReport w = suite(CalculusId::FFull, 601, 0, {CheckId::CpsCommutative}, true);
  SuiteReport s = suite(CalculusId::FFull, 601, 300, {CheckId::CpsCommutative}, false);
  bool ok = w.passed(CheckId::CpsCommutative) && w.perSubject.at(CheckId::CpsCommutative).pass == 21 &&
            s.passed(CheckId::CpsCommutative);
  firstFailure(s);
  return {ok, "witnesses " + counts(w, CheckId::CpsCommutative) + ", suite " + counts(s, CheckId::CpsCommutative)};
}

Verdict c7() {
  SuiteReport w = suite(CalculusId::FFull, 701, 0, {CheckId::ChiDecrease}, true);
  SuiteReport lam = suite(CalculusId::LambdaFull, 702, 300, {CheckId::ChiDecrease}, false);
  SuiteReport f = suite(CalculusId::FFull, 703, 300, {CheckId::ChiDecrease}, false);
  std::size_t strict = 0;
  for (const auto& rec : w.records)
    if (rec.subject.rfind("witness C-", 0) == 0 && rec.passed) ++strict;
  bool ok = w.passed(CheckId::ChiDecrease) && strict == 21 && lam.passed(CheckId::ChiDecrease) &&
            f.passed(CheckId::ChiDecrease);
  firstFailure(lam);
  firstFailure(f);
  return {ok, "witnesses " + std::to_string(strict) + "/21, lambda " + counts(lam, CheckId::ChiDecrease) + ", F " +
                  counts(f, CheckId::ChiDecrease)};
}

Verdict c8() {
  SuiteReport r = suite(CalculusId::FFull, 801, 200, {CheckId::SubstitutionLemmas}, false);
  std::ostringstream d;
  d << r.substInstances << " instances; per equation holds/exact-alpha:";
  bool ok = r.substInstances == 200;
  for (std::size_t k = 0; k < 6; ++k) {
    d << " " << r.substHolds[k] << "/" << r.substExact[k];
    ok = ok && r.substHolds[k] == r.substInstances;
  }
  firstFailure(r);
  return {ok, d.str()};
}

Verdict c9() {
  std::set<CheckId> checks{CheckId::Normalization, CheckId::SubjectReduction, CheckId::StrategyAgreement};
  SuiteReport lam = suite(CalculusId::LambdaFull, 901, 300, checks, true);
  SuiteReport f = suite(CalculusId::FFull, 902, 300, checks, true);
  bool ok = true;
  std::string d;
  for (const SuiteReport* r : {&lam, &f}) {
    for (CheckId c : checks) ok = ok && r->passed(c);
    firstFailure(*r);
    d += std::string(d.empty() ? "" : "; ") + calculusName(r->calculus) + ": " + counts(*r, CheckId::Normalization) +
         ", " + counts(*r, CheckId::SubjectReduction) + ", " + counts(*r, CheckId::StrategyAgreement);
  }
  return {ok, d};
}

Verdict c10() {
  SuiteReport lam = suite(CalculusId::LambdaFull, 1001, 500, {CheckId::Roundtrip}, false);
  SuiteReport f = suite(CalculusId::FFull, 1002, 500, {CheckId::Roundtrip}, false);
  firstFailure(lam);
  firstFailure(f);
  return {lam.passed(CheckId::Roundtrip) && f.passed(CheckId::Roundtrip) &&
              lam.perSubject.at(CheckId::Roundtrip).total() == 500 && f.perSubject.at(CheckId::Roundtrip).total() == 500,
          "lambda " + counts(lam, CheckId::Roundtrip) + ", F " + counts(f, CheckId::Roundtrip)};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {"golden type translation", c1}, {"rule catalog", c2},        {"translation soundness", c3},
      {"simple simulation", c4},       {"CPS beta simulation", c5}, {"CPS commutation invariance", c6},
      {"chi decrease", c7},            {"substitution lemmas", c8}, {"normalization and subject reduction", c9},
      {"round-trip", c10},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    notes.clear();
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !v.pass;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): " << (v.pass ? "PASS" : "FAIL") << " — "
              << v.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]\n"
              << notes << std::flush;
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria) << " criteria passed in " << std::fixed
            << std::setprecision(1) << total << "s\n";
  return strict && failed ? 1 : 0;
}
