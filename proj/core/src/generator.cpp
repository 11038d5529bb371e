#include "ifol/generator.hpp"

#include "ifol/error.hpp"

namespace ifol {

FormulaGenerator::FormulaGenerator(const Signature& sig, GeneratorOptions options, std::uint64_t seed)
    : options_(std::move(options)), rng_(seed) {
  if (options_.predicates.empty()) {
    options_.predicates.assign(sig.predicates().begin(), sig.predicates().end());
  }
  if (options_.constants.empty()) {
    options_.constants.assign(sig.constants().begin(), sig.constants().end());
  }
  if (options_.variables.empty()) throw Error("random formulas need at least one variable name");
  if (options_.abstraction_prob < 0 || options_.abstraction_prob > 1) {
    throw Error("abstraction probability must lie in [0, 1]");
  }
}

bool FormulaGenerator::chance(double p) {
  // 53 random bits mapped onto [0, 1)
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
}

const std::string& FormulaGenerator::variable() {
  return options_.variables[below(options_.variables.size())];
}

FormulaPtr FormulaGenerator::next() { return formula(options_.max_depth); }

// Operands are drawn into locals first: argument evaluation order is
// unspecified and would otherwise make the stream compiler-dependent.
FormulaPtr FormulaGenerator::formula(std::size_t depth) {
  if (depth == 0) return atom(0);
  const std::uint64_t kinds = options_.modal ? 13 : 11;
  switch (below(kinds)) {
    case 0:
    case 1:
      return atom(depth);
    case 2:
      return make_neg(formula(depth - 1));
    case 3: {
      FormulaPtr left = formula(depth - 1);
      return make_conj(left, formula(depth - 1));
    }
    case 4: {
      FormulaPtr left = formula(depth - 1);
      return make_disj(left, formula(depth - 1));
    }
    case 5: {
      FormulaPtr left = formula(depth - 1);
      return make_implies(left, formula(depth - 1));
    }
    case 6: {
      FormulaPtr left = formula(depth - 1);
      return make_equiv(left, formula(depth - 1));
    }
    case 7: {
      std::string v = variable();
      return make_exists(v, formula(depth - 1));
    }
    case 8: {
      std::string v = variable();
      return make_forall(v, formula(depth - 1));
    }
    case 9: {
      std::string v = variable();
      return make_exists_unique(v, formula(depth - 1));
    }
    case 10: {
      Term left = argument(depth);
      return make_identity(left, argument(depth));
    }
    case 11:
      return make_box(formula(depth - 1));
    default:
      return make_diamond(formula(depth - 1));
  }
}

FormulaPtr FormulaGenerator::atom(std::size_t depth) {
  if (options_.predicates.empty()) return make_truth();
  const PredicateSymbol& p = options_.predicates[below(options_.predicates.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < p.arity; ++i) args.push_back(argument(depth));
  return make_atom(p, std::move(args));
}

Term FormulaGenerator::argument(std::size_t depth) {
  if (depth > 0 && chance(options_.abstraction_prob)) return abstraction(depth - 1);
  const std::uint64_t roll = below(10);
  if (roll == 0 && !options_.constants.empty()) {
    return Constant{options_.constants[below(options_.constants.size())]};
  }
  if (roll == 1 && !options_.elements.empty()) {
    return ElementRef{DomainElement::particular(options_.elements[below(options_.elements.size())])};
  }
  return Variable{variable()};
}

Abstraction FormulaGenerator::abstraction(std::size_t depth) {
  FormulaPtr body = formula(std::min<std::size_t>(depth, 1));
  const VarTuple fv = free_vars(*body);
  // alpha: a random subset of the free variables in a random order
  VarTuple pool = fv, alpha;
  for (std::size_t i = pool.size(); i > 0; --i) std::swap(pool[i - 1], pool[below(i)]);
  for (const std::string& v : pool) {
    if (below(2) == 0) alpha.push_back(v);
  }
  return make_abstraction(std::move(body), std::move(alpha));
}

std::vector<FormulaPtr> random_formulas(const Signature& sig, const GeneratorOptions& options,
                                        std::uint64_t seed, std::size_t count) {
  FormulaGenerator gen(sig, options, seed);
  std::vector<FormulaPtr> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace ifol
