#pragma once

// Seeded random formulas for sweeps. The output depends only on the seed and
// the options: draws use raw mt19937_64 words (no library distributions) so
// the same seed gives the same formulas on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ifol/syntax.hpp"

namespace ifol {

struct GeneratorOptions {
  std::size_t max_depth = 3;
  double abstraction_prob = 0.2;
  /// Empty means every predicate of the signature.
  std::vector<PredicateSymbol> predicates;
  std::vector<std::string> variables{"x", "y", "z"};
  /// Empty means every constant of the signature.
  std::vector<std::string> constants;
  /// Particulars that may appear as `#a` arguments.
  std::vector<std::string> elements;
  bool modal = false;
};

class FormulaGenerator {
 public:
  FormulaGenerator(const Signature& sig, GeneratorOptions options, std::uint64_t seed);

  FormulaPtr next();

 private:
  FormulaPtr formula(std::size_t depth);
  FormulaPtr atom(std::size_t depth);
  Term argument(std::size_t depth);
  Abstraction abstraction(std::size_t depth);

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool chance(double p);
  const std::string& variable();

  GeneratorOptions options_;
  std::mt19937_64 rng_;
};

/// `count` formulas from one generator.
std::vector<FormulaPtr> random_formulas(const Signature& sig, const GeneratorOptions& options,
                                        std::uint64_t seed, std::size_t count);

}  // namespace ifol
