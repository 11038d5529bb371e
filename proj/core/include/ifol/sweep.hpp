#pragma once

// Bulk checks over (formula, world) pairs: the Tarski-versus-algebraic
// diagram and the Tarski constraint. Worlds are split across threads; every
// result lands in a fixed slot, so reports do not depend on scheduling.

#include <functional>
#include <optional>
#include <vector>

#include "ifol/semantics.hpp"
#include "ifol/worlds.hpp"

namespace ifol {

struct SweepOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Test hook applied to every algebraic extension before comparison.
  std::function<Relation(const Relation&)> tamper;
};

struct PairFailure {
  std::size_t world = 0;
  /// Diagram: first tuple of the symmetric difference. Constraint: the
  /// assignment's values in free-variable order.
  Tuple witness;
  /// Diagram only: the witness is in the Tarski side.
  bool witness_in_tarski = false;
  bool arity_mismatch = false;
};

struct FormulaOutcome {
  std::size_t checks = 0;
  /// First failing world (and its witness), if any.
  std::optional<PairFailure> failure;
  std::size_t failed_worlds = 0;
};

struct SweepReport {
  std::vector<FormulaOutcome> formulas;
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

/// tarski_eval(f, w) against h_w(I(f)) for every formula and world.
SweepReport diagram_sweep(const std::vector<FormulaPtr>& formulas, const WorldSet& ws,
                          ConceptRegistry& reg, const SweepOptions& options = {});

/// The Tarski constraint for every formula, world and assignment over the
/// formula's free variables.
SweepReport constraint_sweep(const std::vector<FormulaPtr>& formulas, const WorldSet& ws,
                             ConceptRegistry& reg, const SweepOptions& options = {});

}  // namespace ifol
