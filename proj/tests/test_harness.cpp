#include <numeric>

#include "common.hpp"
#include "fsn/generator.hpp"
#include "fsn/harness.hpp"

using namespace fsn;
using namespace fsn::test;

TEST_CASE("generator") {
  GenConfig tiny;
  tiny.maxSize = 1;
  Generated one = genTypedTerm(tiny);
  CHECK(one.term.is(Term::Kind::Var));
  CHECK(one.ctx.lookup(one.term.name()));

  for (CalculusId c : {CalculusId::LambdaFull, CalculusId::FFull}) {
    GenConfig cfg;
    cfg.calculus = c;
    Generator a(cfg), b(cfg);
    for (int i = 0; i < 40; ++i) {
      Generated x = a.next(), y = b.next();
      CHECK(print(x.term) == print(y.term));
      CHECK(typable(x.ctx, x.term));
      CHECK(size(x.term) <= cfg.maxSize);
      CHECK(inFragment(x.term, c));
    }
  }
}

TEST_CASE("check names") {
  CHECK(parseCheckList("all").size() == kCheckCount);
  CHECK(parseCheckList("chi-decrease,roundtrip") == std::set<CheckId>{CheckId::ChiDecrease, CheckId::Roundtrip});
  CHECK_THROWS_AS(parseCheckList("bogus"), std::invalid_argument);
  for (CheckId c : allChecks()) CHECK(parseCheckName(checkName(c)) == c);
}

namespace {

SuiteReport witnessesOnly(CheckId c) {
  SuiteOptions opts;
  opts.checks = {c};
  return runSuite(GenConfig{}, 0, opts);
}

std::size_t commutativeRecords(const SuiteReport& r, CheckId c) {
  std::size_t n = 0;
  for (const auto& rec : r.records)
    if (rec.check == c && rec.subject.find("witness C-") == 0 && rec.passed) ++n;
  return n;
}

}  // namespace

TEST_CASE("witness suites") {
  SuiteReport chi = witnessesOnly(CheckId::ChiDecrease);
  CHECK(chi.passed(CheckId::ChiDecrease));
  CHECK(commutativeRecords(chi, CheckId::ChiDecrease) == 21);

  SuiteReport cps = witnessesOnly(CheckId::CpsCommutative);
  CHECK(cps.passed(CheckId::CpsCommutative));
  CHECK(cps.perSubject.at(CheckId::CpsCommutative).pass == 21);
  CHECK(cps.perInstance.at(CheckId::CpsCommutative).pass == 21);

  for (std::size_t k = 0; k < kRuleCount; ++k) CHECK(cps.coverage[k] >= 1);
}

TEST_CASE("generated suite") {
  GenConfig cfg;
  cfg.calculus = CalculusId::FFull;
  cfg.seed = 5;
  SuiteOptions opts;
  opts.checks = parseCheckList("normalization,strategy-agreement,subject-reduction,roundtrip,substitution-lemmas");
  SuiteReport r = runSuite(cfg, 30, opts);
  CHECK(r.allPassed());
  CHECK(r.perInstance.at(CheckId::Normalization).fail == 0);
  CHECK(r.substInstances == 30);
  CHECK(std::accumulate(r.coverage.begin(), r.coverage.end(), std::size_t{0}) == r.stepsChecked);
  CHECK(r.toJson()["records"].size() == r.records.size());

  SuiteOptions threaded = opts;
  threaded.threads = 3;
  CHECK(runSuite(cfg, 30, threaded).toJson() == r.toJson());
}

TEST_CASE("failures are shrunk") {
  SuiteOptions opts;
  opts.checks = {CheckId::SimSimple};
  SuiteReport r = runSuite(GenConfig{}, 0, opts);
  CHECK_FALSE(r.passed(CheckId::SimSimple));
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& f : r.failures) CHECK(parseProgram(f.program).term.arity() >= 1);
}
