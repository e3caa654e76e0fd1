#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsn/typecheck.hpp"

namespace fsn {

struct GenConfig {
  CalculusId calculus = CalculusId::LambdaFull;
  std::size_t maxSize = 30;
  std::uint64_t seed = 42;
  std::vector<std::string> atomPool = {"p", "q"};
  std::size_t contextArity = 2;
};

class GenerationStuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Generated {
  Context ctx;
  Term term;
};

// Type-directed generator of well-typed terms. Goal types lean toward ∨, ⊥
// and ∃, and eliminators are favoured so that β- and commutative redexes are
// common. The same config always yields the same sequence.
class Generator {
 public:
  explicit Generator(GenConfig cfg);

  Generated next();
  // A term of type `goal` under `ctx` with at most `budget` nodes.
  std::optional<Term> termOfType(const Context& ctx, const Type& goal, std::size_t budget);
  // A random type of the configured calculus over the atom pool and the
  // type variables in `scope`.
  Type randomType(int depth, const std::vector<std::string>& scope = {});
  std::uint64_t below(std::uint64_t n) { return n ? rng_() % n : 0; }

  const GenConfig& config() const { return cfg_; }

 private:
  struct Impl;
  GenConfig cfg_;
  std::mt19937_64 rng_;
};

Generated genTypedTerm(const GenConfig& cfg);

}  // namespace fsn
