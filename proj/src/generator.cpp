#include "fsn/generator.hpp"

#include <functional>
#include <optional>

namespace fsn {

using TK = Type::Kind;

namespace {

const std::vector<std::string> kTermBinders = {"x", "y", "z", "w"};
const std::vector<std::string> kTypeBinders = {"r", "s"};
constexpr int kMaxAttempts = 64;

bool polymorphic(CalculusId c) { return c == CalculusId::FFull || c == CalculusId::FArrow; }

}  // namespace

struct Generator::Impl {
  Generator& g;
  std::vector<std::pair<std::string, Type>> env;
  std::vector<std::string> tvars;
  NameSet typeNames;  // every type name in use, for fresh type variables

  using Option = std::pair<unsigned, std::function<std::optional<Term>()>>;

  explicit Impl(Generator& gen) : g(gen) {
    for (const auto& a : g.cfg_.atomPool) typeNames.insert(a);
    for (const auto& b : kTypeBinders) typeNames.insert(b);
  }

  bool poly() const { return polymorphic(g.cfg_.calculus); }
  bool full() const { return g.cfg_.calculus == CalculusId::LambdaFull || g.cfg_.calculus == CalculusId::FFull; }

  bool visible(std::size_t i) const {
    for (std::size_t j = i + 1; j < env.size(); ++j)
      if (env[j].first == env[i].first) return false;
    return true;
  }

  std::size_t work = 0;
  std::size_t workLimit = SIZE_MAX;

  std::string termBinder() { return kTermBinders[g.below(kTermBinders.size())]; }

  std::string freshTypeVar() {
    std::string p = freshName("t", typeNames);
    typeNames.insert(p);
    return p;
  }

  Type randType(int depth) { return g.randomType(depth, tvars); }

  // Splits `total` ≥ 2 into two positive parts.
  std::pair<std::size_t, std::size_t> split(std::size_t total) {
    std::size_t a = 1 + g.below(total - 1);
    return {a, total - a};
  }

  std::optional<Term> pick(std::vector<Option> opts) {
    while (!opts.empty()) {
      unsigned sum = 0;
      for (const auto& o : opts) sum += o.first;
      if (sum == 0) return std::nullopt;
      std::uint64_t r = g.below(sum);
      std::size_t i = 0;
      for (; i < opts.size(); ++i) {
        if (r < opts[i].first) break;
        r -= opts[i].first;
      }
      if (auto t = opts[i].second()) return t;
      opts.erase(opts.begin() + static_cast<std::ptrdiff_t>(i));
    }
    return std::nullopt;
  }

  std::optional<Term> withVar(const std::string& x, const Type& t, const Type& goal, std::size_t budget) {
    env.emplace_back(x, t);
    auto r = gen(goal, budget, false);
    env.pop_back();
    return r;
  }

  std::optional<Term> gen(const Type& goal, std::size_t budget, bool elimHead) {
    if (budget == 0 || ++work > workLimit) return std::nullopt;
    std::vector<Option> opts;
    unsigned elimBoost = elimHead ? 3 : 1;

    std::vector<std::size_t> matching;
    for (std::size_t i = 0; i < env.size(); ++i)
      if (visible(i) && alphaEq(env[i].second, goal)) matching.push_back(i);
    if (!matching.empty())
      opts.push_back({budget <= 2 ? 8u : 3u, [&, matching] {
                        return std::optional<Term>(Term::var(env[matching[g.below(matching.size())]].first));
                      }});
    if (budget == 1) return pick(std::move(opts));

    opts.push_back({3, [&] { return intro(goal, budget); }});
    if (full()) opts.push_back({2 * elimBoost, [&] { return epsilon(goal, budget); }});
    if (full() && budget >= 4) opts.push_back({3 * elimBoost, [&] { return caseOf(goal, budget); }});
    if (budget >= 3) {
      opts.push_back({2, [&] { return app(goal, budget); }});
      if (full()) opts.push_back({2, [&] { return proj(goal, budget); }});
      opts.push_back({2, [&] { return headVar(goal, budget); }});
      if (poly()) {
        if (g.cfg_.calculus == CalculusId::FFull) opts.push_back({2 * elimBoost, [&] { return unpack(goal, budget); }});
        opts.push_back({1, [&] { return tyApp(goal, budget); }});
      }
    }
    return pick(std::move(opts));
  }

  std::optional<Term> intro(const Type& goal, std::size_t budget) {
    switch (goal.kind()) {
      case TK::Arrow: {
        std::string x = termBinder();
        auto b = withVar(x, goal.dom(), goal.cod(), budget - 1);
        if (!b) return std::nullopt;
        return Term::lam(x, goal.dom(), *b);
      }
      case TK::And: {
        if (budget < 3) return std::nullopt;
        auto [b1, b2] = split(budget - 1);
        auto l = gen(goal.left(), b1, false);
        if (!l) return std::nullopt;
        auto r = gen(goal.right(), budget - 1 - size(*l), false);
        if (!r) return std::nullopt;
        (void)b2;
        return Term::pair(*l, *r);
      }
      case TK::Or: {
        bool left = g.below(2) == 0;
        auto t = gen(left ? goal.left() : goal.right(), budget - 1, false);
        if (!t) return std::nullopt;
        return left ? Term::inj1(*t, goal) : Term::inj2(*t, goal);
      }
      case TK::Forall: {
        std::string p = goal.name();
        Type body = goal.body();
        bool clash = false;
        for (const auto& v : env)
          if (occursFreeIn(p, v.second)) clash = true;
        for (const auto& t : tvars)
          if (t == p) clash = true;
        if (clash) {
          std::string q = freshTypeVar();
          body = substType(body, p, Type::atom(q));
          p = q;
        }
        tvars.push_back(p);
        auto b = gen(body, budget - 1, false);
        tvars.pop_back();
        if (!b) return std::nullopt;
        return Term::tyLam(p, *b);
      }
      case TK::Exists: {
        Type witness = randType(1);
        auto t = gen(substType(goal.body(), goal.name(), witness), budget - 1, false);
        if (!t) return std::nullopt;
        return Term::pack(witness, *t, goal);
      }
      default: return std::nullopt;
    }
  }

  std::optional<Term> epsilon(const Type& goal, std::size_t budget) {
    auto t = gen(Type::bot(), budget - 1, true);
    if (!t) return std::nullopt;
    return Term::eps(*t, goal);
  }

  std::optional<Term> caseOf(const Type& goal, std::size_t budget) {
    Type sum = Type::disj(randType(1), randType(1));
    auto [bs, rest] = split(budget - 1);
    if (rest < 2) return std::nullopt;
    auto s = gen(sum, bs, true);
    if (!s) return std::nullopt;
    std::size_t left = budget - 1 - size(*s);
    if (left < 2) return std::nullopt;
    auto [b1, b2] = split(left);
    std::string x = termBinder();
    std::string y = termBinder();
    auto l = withVar(x, sum.left(), goal, b1);
    if (!l) return std::nullopt;
    auto r = withVar(y, sum.right(), goal, left - size(*l));
    if (!r) return std::nullopt;
    (void)b2;
    return Term::caseOf(*s, x, *l, y, *r);
  }

  std::optional<Term> unpack(const Type& goal, std::size_t budget) {
    std::string q = kTypeBinders[g.below(kTypeBinders.size())];
    tvars.push_back(q);
    Type body = randType(1);
    tvars.pop_back();
    Type ex = Type::exists(q, body);
    auto [bs, bb] = split(budget - 1);
    auto s = gen(ex, bs, true);
    if (!s) return std::nullopt;
    std::string p = freshTypeVar();
    std::string x = termBinder();
    tvars.push_back(p);
    auto n = withVar(x, substType(body, q, Type::atom(p)), goal, budget - 1 - size(*s));
    tvars.pop_back();
    (void)bb;
    if (!n) return std::nullopt;
    return Term::unpack(*s, p, x, *n);
  }

  std::optional<Term> app(const Type& goal, std::size_t budget) {
    Type arg = randType(1);
    auto [bf, ba] = split(budget - 1);
    auto f = gen(Type::arrow(arg, goal), bf, true);
    if (!f) return std::nullopt;
    auto a = gen(arg, budget - 1 - size(*f), false);
    (void)ba;
    if (!a) return std::nullopt;
    return Term::app(*f, *a);
  }

  std::optional<Term> proj(const Type& goal, std::size_t budget) {
    Type other = randType(1);
    bool first = g.below(2) == 0;
    Type prod = first ? Type::conj(goal, other) : Type::conj(other, goal);
    auto t = gen(prod, budget - 1, true);
    if (!t) return std::nullopt;
    return first ? Term::proj1(*t) : Term::proj2(*t);
  }

  std::optional<Term> tyApp(const Type& goal, std::size_t budget) {
    NameSet free = freeTypeVars(goal);
    std::vector<std::string> atoms(free.begin(), free.end());
    if (atoms.empty() || g.below(3) == 0) {
      std::string r = freshTypeVar();
      auto t = gen(Type::forall(r, Type::atom(r)), budget - 1, true);
      if (!t) return std::nullopt;
      return Term::tyApp(*t, goal);
    }
    std::string q = atoms[g.below(atoms.size())];
    std::string r = freshTypeVar();
    Type all = Type::forall(r, substType(goal, q, Type::atom(r)));
    auto t = gen(all, budget - 1, true);
    if (!t) return std::nullopt;
    return Term::tyApp(*t, Type::atom(q));
  }

  // A visible variable whose type yields `goal` after one application or
  // projection.
  std::optional<Term> headVar(const Type& goal, std::size_t budget) {
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (!visible(i)) continue;
      const Type& t = env[i].second;
      if ((t.is(TK::Arrow) && alphaEq(t.cod(), goal)) ||
          (t.is(TK::And) && (alphaEq(t.left(), goal) || alphaEq(t.right(), goal))))
        cands.push_back(i);
    }
    if (cands.empty()) return std::nullopt;
    const auto& [x, t] = env[cands[g.below(cands.size())]];
    Term v = Term::var(x);
    if (t.is(TK::And)) return alphaEq(t.left(), goal) ? Term::proj1(v) : Term::proj2(v);
    auto a = gen(t.dom(), budget - 2, false);
    if (!a) return std::nullopt;
    return Term::app(v, *a);
  }
};

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {}

Type Generator::randomType(int depth, const std::vector<std::string>& scope) {
  bool poly = polymorphic(cfg_.calculus);
  bool full = cfg_.calculus == CalculusId::FFull || cfg_.calculus == CalculusId::LambdaFull;
  auto leaf = [&]() -> Type {
    std::size_t n = cfg_.atomPool.size() + scope.size();
    std::uint64_t r = below(n + 1);
    if (r == n || cfg_.calculus == CalculusId::LambdaArrow) return Type::bot();
    return r < cfg_.atomPool.size() ? Type::atom(cfg_.atomPool[r]) : Type::atom(scope[r - cfg_.atomPool.size()]);
  };
  if (depth <= 0) return leaf();
  // leaf, ⊥, ∨, ∧, →, ∀, ∃
  unsigned w[7] = {3, 2, full ? 4u : 0u, full ? 2u : 0u, 3, poly ? 1u : 0u,
                   cfg_.calculus == CalculusId::FFull ? 2u : 0u};
  unsigned sum = 0;
  for (unsigned x : w) sum += x;
  std::uint64_t r = below(sum);
  int k = 0;
  while (r >= w[k]) r -= w[k++];
  switch (k) {
    case 0: return leaf();
    case 1: return Type::bot();
    case 2: return Type::disj(randomType(depth - 1, scope), randomType(depth - 1, scope));
    case 3: return Type::conj(randomType(depth - 1, scope), randomType(depth - 1, scope));
    case 4: return Type::arrow(randomType(depth - 1, scope), randomType(depth - 1, scope));
    default: {
      std::string b = kTypeBinders[below(kTypeBinders.size())];
      auto inner = scope;
      inner.push_back(b);
      Type body = randomType(depth - 1, inner);
      return k == 5 ? Type::forall(b, body) : Type::exists(b, body);
    }
  }
}

Generated Generator::next() {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Impl impl(*this);
    Context ctx;
    ctx.declare("a", Type::bot());
    impl.env.emplace_back("a", Type::bot());
    for (std::size_t i = 0; i < cfg_.contextArity; ++i) {
      std::string c = "c" + std::to_string(i);
      Type t = randomType(2);
      ctx.declare(c, t);
      impl.env.emplace_back(c, t);
    }
    Type goal = (cfg_.maxSize <= 2 || below(4) == 0) ? impl.env[below(impl.env.size())].second : randomType(2);
    std::size_t budget = cfg_.maxSize <= 4 ? cfg_.maxSize : cfg_.maxSize / 2 + below(cfg_.maxSize / 2 + 1);
    if (auto t = impl.gen(goal, budget, below(2) == 0)) return {ctx, *t};
  }
  throw GenerationStuck("no term found within the size budget");
}

std::optional<Term> Generator::termOfType(const Context& ctx, const Type& goal, std::size_t budget) {
  Impl impl(*this);
  for (const auto& [x, t] : ctx.vars()) {
    impl.env.emplace_back(x, t);
    collectAllNames(t, impl.typeNames);
  }
  for (const auto& p : ctx.typeVars()) {
    impl.tvars.push_back(p);
    impl.typeNames.insert(p);
  }
  collectAllNames(goal, impl.typeNames);
  impl.workLimit = 500;
  for (int attempt = 0; attempt < 8; ++attempt) {
    impl.work = 0;
    if (auto t = impl.gen(goal, budget, false)) return t;
  }
  return std::nullopt;
}

Generated genTypedTerm(const GenConfig& cfg) { return Generator(cfg).next(); }

}  // namespace fsn
