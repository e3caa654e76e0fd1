#include "fsn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fsn/ast_json.hpp"
#include "fsn/measure.hpp"
#include "fsn/syntax.hpp"
#include "fsn/translate_cps.hpp"
#include "fsn/translate_simple.hpp"
#include "fsn/witnesses.hpp"

namespace fsn {

namespace {

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "soundness-simple", "soundness-cps",     "sim-simple",         "sim-cps-beta",
    "cps-commutative",  "chi-decrease",      "subject-reduction",  "normalization",
    "strategy-agreement", "substitution-lemmas", "roundtrip", "pattern-faithfulness",
};

}  // namespace

const std::array<CheckId, kCheckCount>& allChecks() {
  static const std::array<CheckId, kCheckCount> all = [] {
    std::array<CheckId, kCheckCount> a{};
    for (std::size_t i = 0; i < kCheckCount; ++i) a[i] = static_cast<CheckId>(i);
    return a;
  }();
  return all;
}

const char* checkName(CheckId c) { return kCheckNames[static_cast<std::size_t>(c)]; }

std::optional<CheckId> parseCheckName(std::string_view name) {
  for (std::size_t i = 0; i < kCheckCount; ++i)
    if (name == kCheckNames[i]) return static_cast<CheckId>(i);
  return std::nullopt;
}

std::set<CheckId> parseCheckList(std::string_view list) {
  std::set<CheckId> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t comma = list.find(',', pos);
    std::string_view item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "all") {
      out.insert(allChecks().begin(), allChecks().end());
    } else if (!item.empty()) {
      auto c = parseCheckName(item);
      if (!c) throw std::invalid_argument("unknown check '" + std::string(item) + "'");
      out.insert(*c);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

namespace {

struct Subject {
  std::string name;
  Context ctx;
  Term term;
  std::optional<SubstInstance> subst;
};

struct StepCase {
  Term term;
  ReductionStep step;
};

struct Outcome {
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::string detail;
  std::array<std::size_t, kRuleCount> ruleFailures{};
  std::map<std::string, std::size_t> reasons;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (ok) return;
    if (failed++ == 0) detail = what;
  }
  void recordStep(bool ok, const StepCase& s, const std::string& what, bool tally = false) {
    if (!ok) {
      ++ruleFailures[ruleIndex(s.step.rule)];
      if (tally) ++reasons[std::string(ruleName(s.step.rule)) + " " + what];
    }
    record(ok, std::string(ruleName(s.step.rule)) + " at " + pathToString(s.step.path) + ": " + what);
  }
};

bool simplyTyped(const Context& ctx, const Term& m) {
  for (const auto& [x, t] : ctx.vars())
    if (!inFragment(t, CalculusId::LambdaFull)) return false;
  return inFragment(m, CalculusId::LambdaFull);
}

// Everything needed to run checks on one term; normal forms are computed
// on first use.
class Evaluation {
 public:
  Evaluation(const Context& ctx, const Term& m, const SuiteOptions& opts) : ctx_(ctx), m_(m), opts_(opts) {
    for (auto& s : redexes(m)) steps_.push_back({m, s});
    try {
      Normalized n = normalize(ctx, m, Strategy::LeftmostOutermost, opts.traceSteps);
      collectTrace(n.term, n.trace);
    } catch (const FuelExhausted& e) {
      collectTrace(e.reached(), e.trace());
    }
  }

  const std::vector<StepCase>& steps() const { return steps_; }

  Outcome run(CheckId c, const std::optional<SubstInstance>& subst) {
    Outcome o;
    try {
      dispatch(c, subst, o);
    } catch (const std::exception& e) {
      o.record(false, std::string("exception: ") + e.what());
    }
    return o;
  }

 private:
  void collectTrace(const Term&, const std::vector<ReductionStep>& trace) {
    Term cur = m_;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      if (i > 0) steps_.push_back({cur, trace[i]});
      cur = step(ctx_, cur, trace[i]);
    }
  }

  struct NormalForm {
    std::optional<Term> term;
    std::string error;
  };

  const NormalForm& normalForm(Strategy s) {
    auto& slot = normals_[static_cast<int>(s)];
    if (!slot) {
      slot.emplace();
      try {
        slot->term = normalize(ctx_, m_, s, opts_.fuel).term;
      } catch (const FuelExhausted& e) {
        slot->error = e.what();
      }
    }
    return *slot;
  }

  void dispatch(CheckId c, const std::optional<SubstInstance>& subst, Outcome& o) {
    switch (c) {
      case CheckId::SoundnessSimple: {
        if (!simplyTyped(ctx_, m_)) return;
        Term t = trTerm(ctx_, m_);
        Type want = trType(infer(ctx_, m_));
        Type got = infer(trContext(ctx_), t);
        o.record(alphaEq(got, want), "translation has type " + print(got) + ", expected " + print(want));
        o.record(inFragment(t, CalculusId::LambdaArrow) && inFragment(got, CalculusId::LambdaArrow),
                 "translation leaves the simply typed arrow fragment");
        return;
      }
      case CheckId::SoundnessCps: {
        Term t = trfTerm(ctx_, m_);
        Type want = trfType(infer(ctx_, m_));
        Type got = infer(trfContext(ctx_), t);
        o.record(alphaEq(got, want), "translation has type " + print(got) + ", expected " + print(want));
        o.record(inFragment(t, CalculusId::FArrow) && inFragment(got, CalculusId::FArrow),
                 "translation leaves the polymorphic arrow fragment");
        return;
      }
      case CheckId::SimSimple:
        if (!simplyTyped(ctx_, m_)) return;
        for (const auto& s : steps_) {
          auto r = checkSimulationSimple(ctx_, s.term, s.step, std::nullopt, opts_.stateBudget);
          o.recordStep(r.ok(), s, reachOutcomeName(r.reach.outcome), true);
        }
        return;
      case CheckId::SimCpsBeta:
        for (const auto& s : steps_) {
          if (isCommutative(s.step.rule)) continue;
          auto r = checkSimulationCpsBeta(ctx_, s.term, s.step, std::nullopt, opts_.stateBudget);
          o.recordStep(r.ok(), s, reachOutcomeName(r.reach.outcome), true);
        }
        return;
      case CheckId::CpsCommutative:
        for (const auto& s : steps_) {
          if (!isCommutative(s.step.rule)) continue;
          o.recordStep(checkCpsCommutative(ctx_, s.term, s.step).equal, s, "translations differ");
        }
        return;
      case CheckId::ChiDecrease: {
        MeasureValue start = chi(m_);
        o.record(start >= 1, "chi below 1");
        for (const auto& s : steps_) {
          if (!isCommutative(s.step.rule)) continue;
          Decrease d = checkDecrease(ctx_, s.term, s.step);
          o.recordStep(d.strictlyDecreased, s, "chi " + d.before.str() + " -> " + d.after.str());
        }
        for (Strategy st : {Strategy::LeftmostOutermost, Strategy::RightmostInnermost}) {
          try {
            Normalized n = normalize(ctx_, m_, st, opts_.fuel, RedexFilter::CommutationsOnly);
            o.record(MeasureValue(n.trace.size()) <= start, std::string("commutation-only run under ") +
                                                                strategyName(st) + " took " +
                                                                std::to_string(n.trace.size()) + " steps, chi " +
                                                                start.str());
          } catch (const FuelExhausted& e) {
            o.record(false, std::string("commutation-only run under ") + strategyName(st) + ": " + e.what());
          }
        }
        return;
      }
      case CheckId::SubjectReduction:
        for (const auto& s : steps_) {
          Type before = infer(ctx_, s.term);
          Type after = infer(ctx_, step(ctx_, s.term, s.step));
          o.recordStep(alphaEq(before, after), s, "type " + print(before) + " became " + print(after));
        }
        return;
      case CheckId::Normalization:
        for (Strategy st : {Strategy::LeftmostOutermost, Strategy::RightmostInnermost, Strategy::CommutationsFirst}) {
          const NormalForm& nf = normalForm(st);
          bool ok = nf.term && redexes(*nf.term).empty();
          o.record(ok, std::string(strategyName(st)) + ": " + (nf.term ? "result has redexes" : nf.error));
        }
        return;
      case CheckId::StrategyAgreement: {
        const NormalForm& lo = normalForm(Strategy::LeftmostOutermost);
        const NormalForm& ri = normalForm(Strategy::RightmostInnermost);
        bool ok = lo.term && ri.term && alphaEq(*lo.term, *ri.term);
        o.record(ok, lo.term && ri.term ? "normal forms differ: " + print(*lo.term) + " vs " + print(*ri.term)
                                        : "normalization did not finish");
        return;
      }
      case CheckId::SubstitutionLemmas: {
        if (!subst) return;
        SubstReport r = checkSubstitutionLemmas(*subst);
        for (std::size_t i = 0; i < 6; ++i) o.record(r.holds[i], "equation " + std::to_string(i + 1) + " fails");
        return;
      }
      case CheckId::Roundtrip: {
        std::string text = print(m_);
        Term back = parseTerm(text);
        o.record(alphaEq(back, m_) && print(back) == text, "term does not survive print/parse: " + text);
        Program prog{ctx_, m_};
        Program again = parseProgram(printProgram(prog));
        bool ctxOk = again.ctx.vars().size() == ctx_.vars().size();
        for (std::size_t i = 0; ctxOk && i < ctx_.vars().size(); ++i)
          ctxOk = again.ctx.vars()[i].first == ctx_.vars()[i].first &&
                  alphaEq(again.ctx.vars()[i].second, ctx_.vars()[i].second);
        o.record(ctxOk && alphaEq(again.term, m_), "program does not survive print/parse");
        Program fromJson = programFromJson(toJson(prog));
        o.record(alphaEq(fromJson.term, m_) && fromJson.ctx.vars().size() == ctx_.vars().size(),
                 "program does not survive the AST format");
        return;
      }
      case CheckId::PatternFaithfulness:
        for (const auto& s : steps_) {
          if (!isCommutative(s.step.rule)) continue;
          Context env = contextAt(ctx_, s.term, s.step.path);
          const Term& redex = subtermAt(s.term, s.step.path);
          auto viaPattern = contractByPattern(env, redex);
          Term viaCatalog = contract(env, redex, s.step.rule);
          bool ok = viaPattern && viaPattern->first == s.step.rule && alphaEq(viaPattern->second, viaCatalog);
          o.recordStep(ok, s, "generic pattern disagrees with the rule catalog");
        }
        return;
    }
  }

  const Context& ctx_;
  const Term& m_;
  const SuiteOptions& opts_;
  std::vector<StepCase> steps_;
  std::array<std::optional<NormalForm>, 3> normals_;
};

// Visible bindings of `ctx` as a declaration list.
Context flatten(const Context& ctx) {
  std::vector<std::string> order;
  for (const auto& [x, t] : ctx.vars())
    if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
  Context out;
  for (const auto& x : order) out.declare(x, *ctx.lookup(x));
  for (const auto& p : ctx.typeVars()) out.bindTypeVar(p);
  return out;
}

struct Shrunk {
  Program program;
  std::string detail;
};

bool isException(const std::string& detail) { return detail.rfind("exception:", 0) == 0; }

// Greedily replaces the counterexample by a proper subterm that still fails
// the same way (an exception only stands in for an exception).
Shrunk shrink(CheckId c, const Context& ctx, const Term& m, const std::string& detail, const SuiteOptions& opts) {
  Program cur{flatten(ctx), m};
  std::string curDetail = detail;
  constexpr int kMaxEvaluations = 200;
  int evaluations = 0;
  bool improved = true;
  while (improved && evaluations < kMaxEvaluations) {
    improved = false;
    std::vector<Path> paths;
    std::vector<std::pair<const Term*, Path>> stack{{&cur.term, {}}};
    while (!stack.empty()) {
      auto [t, p] = stack.back();
      stack.pop_back();
      if (!p.empty()) paths.push_back(p);
      for (std::size_t i = t->arity(); i-- > 0;) {
        Path q = p;
        q.push_back(static_cast<int>(i));
        stack.push_back({&t->child(i), q});
      }
    }
    for (const auto& p : paths) {
      if (++evaluations > kMaxEvaluations) break;
      Context sub = flatten(contextAt(cur.ctx, cur.term, p));
      Term t = subtermAt(cur.term, p);
      Evaluation ev(sub, t, opts);
      Outcome o = ev.run(c, std::nullopt);
      if (o.failed > 0 && isException(o.detail) == isException(detail)) {
        cur = {sub, t};
        curDetail = o.detail;
        improved = true;
        break;
      }
    }
  }
  return {cur, curDetail};
}

struct SubjectResult {
  std::map<CheckId, Outcome> outcomes;
  std::array<std::size_t, kRuleCount> coverage{};
  std::size_t steps = 0;
  std::optional<SubstReport> subst;
  std::vector<FailureRecord> failures;
};

SubjectResult evaluate(const Subject& s, const SuiteOptions& opts, bool keepFailures) {
  SubjectResult r;
  Evaluation ev(s.ctx, s.term, opts);
  for (const auto& sc : ev.steps()) ++r.coverage[ruleIndex(sc.step.rule)];
  r.steps = ev.steps().size();
  for (CheckId c : opts.checks) {
    Outcome o = ev.run(c, s.subst);
    if (o.failed > 0 && keepFailures) {
      Shrunk shown{{s.ctx, s.term}, o.detail};
      if (opts.shrink && c != CheckId::SubstitutionLemmas) shown = shrink(c, s.ctx, s.term, o.detail, opts);
      r.failures.push_back({c, s.name, shown.detail, printProgram(shown.program)});
    }
    r.outcomes.emplace(c, std::move(o));
  }
  if (s.subst && opts.checks.count(CheckId::SubstitutionLemmas)) r.subst = checkSubstitutionLemmas(*s.subst);
  return r;
}

Term continuation(const std::string& x, const Type& xType, const Type& resultType, const std::string& kont,
                  NameSet& used) {
  std::string v = freshName("v", used);
  used.insert(v);
  std::string w = freshName("w", used);
  used.insert(w);
  Term inner = Term::lam(w, starType(xType), Term::app(Term::var(kont), Term::var(v)));
  return Term::lam(v, starType(resultType), Term::app(Term::var(x), inner));
}

std::optional<SubstInstance> makeSubstInstance(Generator& g, const Context& ctx, const Term& m) {
  NameSet fv = freeVars(m);
  std::vector<std::string> order;
  for (const auto& [x, t] : ctx.vars())
    if (fv.count(x)) order.push_back(x);
  for (const auto& [x, t] : ctx.vars())
    if (!fv.count(x)) order.push_back(x);
  if (order.size() > 1) std::swap(order[0], order[g.below(std::min<std::size_t>(order.size(), fv.size() + 1))]);
  // Closed terms of type ⊥ rarely exist once x is gone.
  std::stable_partition(order.begin(), order.end(),
                        [&](const std::string& x) { return !ctx.lookup(x)->is(Type::Kind::Bot); });

  for (const auto& x : order) {
    Context rest;
    for (const auto& [y, t] : ctx.vars())
      if (y != x) rest.declare(y, t);
    const Type& xType = *ctx.lookup(x);
    auto n = g.termOfType(rest, xType, 8);
    if (!n) continue;

    NameSet used = ctx.allNames();
    collectAllNames(m, used);
    collectAllNames(*n, used);
    std::string kont = freshName("kont", used);
    used.insert(kont);
    Term k = continuation(x, xType, infer(ctx, m), kont, used);
    std::optional<Eliminator> e;
    Type eScrut = Type::bot();

    std::vector<Path> elims;
    std::vector<std::pair<const Term*, Path>> stack{{&m, {}}};
    while (!stack.empty()) {
      auto [t, p] = stack.back();
      stack.pop_back();
      if (isEliminatorKind(t->kind())) elims.push_back(p);
      // Only descend through scrutinee positions, which bind nothing.
      if (t->arity() > 0 && (isEliminatorKind(t->kind()) || t->is(Term::Kind::Pair))) {
        for (std::size_t i = 0; i < t->arity(); ++i) {
          if ((t->is(Term::Kind::Case) && i > 0) || (t->is(Term::Kind::Unpack) && i > 0)) continue;
          Path q = p;
          q.push_back(static_cast<int>(i));
          stack.push_back({&t->child(i), q});
        }
      }
    }
    if (elims.empty()) {
      e = EpsElim{infer(ctx, m)};
    } else {
      const Term& sub = subtermAt(m, elims[g.below(elims.size())]);
      auto d = decompose(sub);
      e = d->second;
      eScrut = infer(ctx, d->first);
    }
    Type eResult = [&] {
      NameSet names = used;
      std::string hole = freshName("hole", names);
      Context c = ctx;
      c.bind(hole, eScrut);
      return infer(c, applyEliminator(Term::var(hole), *e));
    }();
    std::string kont2 = freshName("kont", used);
    used.insert(kont2);
    Term ek = continuation(x, xType, eResult, kont2, used);

    const auto& pool = g.config().atomPool;
    std::string p = pool[g.below(pool.size())];
    Type rho = g.randomType(2);
    Type tau = g.randomType(2);
    return SubstInstance{ctx, m, k, *e, eScrut, ek, x, *n, p, rho, tau};
  }
  return std::nullopt;
}

}  // namespace

bool SuiteReport::passed(CheckId c) const {
  auto a = perSubject.find(c);
  auto b = perInstance.find(c);
  return (a == perSubject.end() || a->second.fail == 0) && (b == perInstance.end() || b->second.fail == 0);
}

bool SuiteReport::allPassed() const {
  for (const auto& [c, s] : perSubject)
    if (!passed(c)) return false;
  return true;
}

SuiteReport runSuite(const GenConfig& cfg, std::size_t count, const SuiteOptions& opts) {
  std::vector<Subject> subjects;
  if (opts.includeWitnesses)
    for (const auto& w : witnesses())
      subjects.push_back({std::string("witness ") + ruleName(w.rule), w.program.ctx, w.program.term, std::nullopt});
  Generator gen(cfg);
  GenConfig substCfg = cfg;
  substCfg.seed = cfg.seed ^ 0x5eed5eed5eedULL;
  Generator substGen(substCfg);
  bool wantSubst = opts.checks.count(CheckId::SubstitutionLemmas) > 0;
  for (std::size_t i = 0; i < count; ++i) {
    Generated g = gen.next();
    Subject s{"term " + std::to_string(i), g.ctx, g.term, std::nullopt};
    if (wantSubst) s.subst = makeSubstInstance(substGen, g.ctx, g.term);
    subjects.push_back(std::move(s));
  }

  std::vector<SubjectResult> results(subjects.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < subjects.size(); i = next++) results[i] = evaluate(subjects[i], opts, true);
  };
  std::size_t threads = std::max<std::size_t>(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport rep;
  rep.calculus = cfg.calculus;
  rep.count = count;
  rep.seed = cfg.seed;
  rep.subjects = subjects.size();
  for (CheckId c : opts.checks) {
    rep.perSubject[c];
    rep.perInstance[c];
  }
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    SubjectResult& r = results[i];
    rep.stepsChecked += r.steps;
    for (std::size_t k = 0; k < kRuleCount; ++k) rep.coverage[k] += r.coverage[k];
    for (const auto& [c, o] : r.outcomes) {
      if (o.instances == 0) continue;
      auto& ps = rep.perSubject[c];
      (o.failed ? ps.fail : ps.pass)++;
      rep.perInstance[c].pass += o.instances - o.failed;
      rep.perInstance[c].fail += o.failed;
      auto& rf = rep.ruleFailures[c];
      for (std::size_t k = 0; k < kRuleCount; ++k) rf[k] += o.ruleFailures[k];
      for (const auto& [why, n] : o.reasons) rep.failureReasons[c][why] += n;
      rep.records.push_back({subjects[i].name, c, o.failed == 0, o.instances, o.failed});
    }
    if (r.subst) {
      ++rep.substInstances;
      for (std::size_t k = 0; k < 6; ++k) {
        rep.substExact[k] += r.subst->exact[k];
        rep.substHolds[k] += r.subst->holds[k];
      }
    }
    for (auto& f : r.failures)
      if (rep.failures.size() < opts.maxFailuresKept) rep.failures.push_back(std::move(f));
  }
  return rep;
}

std::string SuiteReport::toText() const {
  std::ostringstream out;
  out << "suite: calculus=" << calculusName(calculus) << " count=" << count << " seed=" << seed
      << " subjects=" << subjects << " steps=" << stepsChecked << "\n";
  for (const auto& [c, s] : perSubject) {
    const CheckStats& inst = perInstance.at(c);
    out << "  " << (passed(c) ? "PASS " : "FAIL ") << checkName(c) << ": subjects " << s.pass << "/" << s.total()
        << ", instances " << inst.pass << "/" << inst.total() << "\n";
    auto rf = ruleFailures.find(c);
    if (rf != ruleFailures.end())
      for (std::size_t k = 0; k < kRuleCount; ++k)
        if (rf->second[k]) out << "      " << ruleName(static_cast<RuleId>(k)) << " failed " << rf->second[k] << "\n";
    auto why = failureReasons.find(c);
    if (why != failureReasons.end())
      for (const auto& [reason, n] : why->second) out << "        " << reason << ": " << n << "\n";
  }
  if (substInstances) {
    out << "substitution equations over " << substInstances << " instances (holds / exact alpha):\n";
    for (std::size_t k = 0; k < 6; ++k)
      out << "  eq " << k + 1 << ": " << substHolds[k] << " / " << substExact[k] << "\n";
  }
  out << "rule coverage:\n";
  for (std::size_t k = 0; k < kRuleCount; ++k)
    out << "  " << ruleName(static_cast<RuleId>(k)) << " " << coverage[k] << "\n";
  if (!failures.empty()) {
    out << "failures (first " << failures.size() << "):\n";
    for (const auto& f : failures) {
      out << "- " << checkName(f.check) << " on " << f.subject << ": " << f.detail << "\n";
      std::istringstream lines(f.program);
      for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
    }
  }
  return out.str();
}

nlohmann::json SuiteReport::toJson() const {
  using nlohmann::json;
  json checks = json::object();
  for (const auto& [c, s] : perSubject) {
    const CheckStats& inst = perInstance.at(c);
    json rules = json::object();
    auto rf = ruleFailures.find(c);
    if (rf != ruleFailures.end())
      for (std::size_t k = 0; k < kRuleCount; ++k)
        if (rf->second[k]) rules[ruleName(static_cast<RuleId>(k))] = rf->second[k];
    checks[checkName(c)] = {{"passed", passed(c)},
                            {"subjectsPass", s.pass},
                            {"subjectsFail", s.fail},
                            {"instancesPass", inst.pass},
                            {"instancesFail", inst.fail},
                            {"ruleFailures", rules}};
    if (auto why = failureReasons.find(c); why != failureReasons.end()) checks[checkName(c)]["failureReasons"] = why->second;
  }
  json cov = json::object();
  for (std::size_t k = 0; k < kRuleCount; ++k) cov[ruleName(static_cast<RuleId>(k))] = coverage[k];
  json recs = json::array();
  for (const auto& r : records)
    recs.push_back({{"subject", r.subject},
                    {"check", checkName(r.check)},
                    {"passed", r.passed},
                    {"instances", r.instances},
                    {"failed", r.failed}});
  json fails = json::array();
  for (const auto& f : failures)
    fails.push_back({{"check", checkName(f.check)}, {"subject", f.subject}, {"detail", f.detail}, {"program", f.program}});
  json out = {{"calculus", calculusName(calculus)},
              {"count", count},
              {"seed", seed},
              {"subjects", subjects},
              {"stepsChecked", stepsChecked},
              {"passed", allPassed()},
              {"checks", checks},
              {"coverage", cov},
              {"failures", fails},
              {"records", recs}};
  if (substInstances)
    out["substitution"] = {{"instances", substInstances}, {"holds", substHolds}, {"exactAlpha", substExact}};
  return out;
}

}  // namespace fsn
