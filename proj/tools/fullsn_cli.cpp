#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fsn/ast_json.hpp"
#include "fsn/harness.hpp"
#include "fsn/measure.hpp"
#include "fsn/syntax.hpp"
#include "fsn/translate_cps.hpp"
#include "fsn/translate_simple.hpp"
#include "fsn/typecheck.hpp"

namespace {

using namespace fsn;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readAll(const std::string& file) {
  std::ostringstream buf;
  if (file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    buf << in.rdbuf();
  }
  return buf.str();
}

Program load(const std::string& file, bool ast) {
  std::string text = readAll(file);
  try {
    if (ast) return programFromJson(nlohmann::json::parse(text));
    return parseProgram(text);
  } catch (const SyntaxError& e) {
    throw InputError(file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(file + ": " + e.what());
  }
}

Type typeOf(const Program& p) {
  try {
    return infer(p.ctx, p.term);
  } catch (const TypeError& e) {
    throw InputError(std::string("type error (") + typeErrorKindName(e.kind()) + ") at " + pathToString(e.path()) +
                     ": " + e.what());
  }
}

// A program followed by its type as a comment, or the AST form.
void emit(const Program& p, const Type& t, bool ast) {
  if (ast) {
    nlohmann::json j = toJson(p);
    j["type"] = toJson(t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::string text = printProgram(p);
    if (!text.empty() && text.back() != '\n') text += '\n';
    std::cout << text << "# : " << print(t) << "\n";
  }
}

Strategy parseStrategy(const std::string& s) {
  if (s == "lo") return Strategy::LeftmostOutermost;
  if (s == "ri") return Strategy::RightmostInnermost;
  return Strategy::CommutationsFirst;
}

int runReduce(const Program& p, const std::string& strategy, std::size_t fuel, bool trace, bool showChi, bool ast) {
  Type t = typeOf(p);
  std::vector<ReductionStep> steps;
  Term result = p.term;
  bool exhausted = false;
  try {
    Normalized n = normalize(p.ctx, p.term, parseStrategy(strategy), fuel);
    steps = n.trace;
    result = n.term;
  } catch (const FuelExhausted& e) {
    steps = e.trace();
    result = e.reached();
    exhausted = true;
  }
  nlohmann::json jtrace = nlohmann::json::array();
  if (trace) {
    Term cur = p.term;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Term next = step(p.ctx, cur, steps[i]);
      std::ostringstream line;
      line << "step " << i + 1 << ": " << ruleName(steps[i].rule) << " at " << pathToString(steps[i].path);
      nlohmann::json js = {{"rule", ruleName(steps[i].rule)}, {"path", pathToString(steps[i].path)}};
      if (showChi) {
        MeasureValue before = chi(cur), after = chi(next);
        line << "  chi " << before << " -> " << after;
        js["chiBefore"] = before.str();
        js["chiAfter"] = after.str();
      }
      if (ast)
        jtrace.push_back(js);
      else
        std::cout << "# " << line.str() << "\n";
      cur = next;
    }
  }
  if (ast) {
    nlohmann::json j = toJson(Program{p.ctx, result});
    j["type"] = toJson(t);
    if (trace) j["trace"] = jtrace;
    j["steps"] = steps.size();
    j["fuelExhausted"] = exhausted;
    std::cout << j.dump(2) << "\n";
  } else {
    if (exhausted) std::cout << "# fuel exhausted after " << steps.size() << " steps\n";
    emit({p.ctx, result}, t, false);
  }
  return exhausted ? kCheckFailed : kOk;
}

int runTranslate(const Program& p, const std::string& target, bool ast) {
  Type t = typeOf(p);
  if (target == "simple") {
    try {
      emit({trContext(p.ctx), trTerm(p.ctx, p.term)}, trType(t), ast);
    } catch (const NotSimplyTyped& e) {
      throw InputError(e.what());
    }
  } else {
    emit({trfContext(p.ctx), trfTerm(p.ctx, p.term)}, trfType(t), ast);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong normalization toolkit for intuitionistic natural deduction with permutative conversions"};
  app.require_subcommand(1);
  bool ast = false;
  app.add_flag("--format-ast,--ast", ast, "read and write the structured AST format");
  std::string format = "text";
  app.add_option("--format", format, "text or ast")->check(CLI::IsMember({"text", "ast"}));
  std::string inputFormat;
  app.add_option("--input-format", inputFormat, "format of FILE; defaults to --format")
      ->check(CLI::IsMember({"text", "ast"}));

  std::string file;
  auto* check = app.add_subcommand("check", "type check a program and print its type");
  check->add_option("FILE", file, "program file, or - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "normalize a program");
  reduce->add_option("FILE", file)->required();
  std::string strategy = "lo";
  std::size_t fuel = kDefaultFuel;
  bool trace = false, showChi = false;
  reduce->add_option("--strategy", strategy)->check(CLI::IsMember({"lo", "ri", "cfirst"}));
  reduce->add_option("--fuel", fuel);
  reduce->add_flag("--trace", trace, "print every step");
  reduce->add_flag("--chi", showChi, "show the measure before and after each step");

  auto* translate = app.add_subcommand("translate", "translate a program");
  translate->add_option("FILE", file)->required();
  std::string target = "cps";
  translate->add_option("--target", target)->check(CLI::IsMember({"simple", "cps"}))->required();

  auto* measure = app.add_subcommand("measure", "print the commutation measure of a program");
  measure->add_option("FILE", file)->required();

  auto* verify = app.add_subcommand("verify", "run the property suite on generated terms");
  std::string calculus = "lambda", checks = "all";
  std::size_t count = 100, threads = 1, maxSize = 30, stateBudget = 20000;
  std::uint64_t seed = 42;
  bool noShrink = false;
  verify->add_option("--calculus", calculus)->check(CLI::IsMember({"lambda", "f"}));
  verify->add_option("--count", count);
  verify->add_option("--seed", seed);
  verify->add_option("--checks", checks, "comma separated check names, or all");
  verify->add_option("--threads", threads);
  verify->add_option("--max-size", maxSize);
  verify->add_option("--state-budget", stateBudget);
  verify->add_flag("--no-shrink", noShrink);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  ast = ast || format == "ast";

  try {
    if (verify->parsed()) {
      GenConfig cfg;
      cfg.calculus = calculus == "f" ? CalculusId::FFull : CalculusId::LambdaFull;
      cfg.seed = seed;
      cfg.maxSize = maxSize;
      SuiteOptions opts;
      try {
        opts.checks = parseCheckList(checks);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      opts.threads = threads;
      opts.stateBudget = stateBudget;
      opts.shrink = !noShrink;
      SuiteReport rep = runSuite(cfg, count, opts);
      if (ast)
        std::cout << rep.toJson().dump(2) << "\n";
      else
        std::cout << rep.toText();
      return rep.allPassed() ? kOk : kCheckFailed;
    }

    Program p = load(file, inputFormat.empty() ? ast : inputFormat == "ast");
    if (check->parsed()) {
      try {
        Type t = infer(p.ctx, p.term);
        if (ast)
          std::cout << toJson(t).dump(2) << "\n";
        else
          std::cout << print(t) << "\n";
        return kOk;
      } catch (const TypeError& e) {
        std::cerr << "type error (" << typeErrorKindName(e.kind()) << ") at " << pathToString(e.path()) << ": "
                  << e.what() << "\n";
        return kCheckFailed;
      }
    }
    if (reduce->parsed()) return runReduce(p, strategy, fuel, trace, showChi, ast);
    if (translate->parsed()) return runTranslate(p, target, ast);
    if (measure->parsed()) {
      typeOf(p);
      std::cout << chi(p.term) << "\n";
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
