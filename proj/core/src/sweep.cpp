#include "ifol/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ifol {

namespace {

// Runs body(world_index) over all worlds on a small pool.
template <typename Body>
void for_each_world(std::size_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

// results[f][w] -> per-formula outcome, first failing world by index.
SweepReport merge(std::vector<std::vector<std::optional<PairFailure>>>& results,
                  const std::vector<std::size_t>& checks_per_world) {
  SweepReport report;
  for (std::size_t f = 0; f < results.size(); ++f) {
    FormulaOutcome out;
    out.checks = checks_per_world[f] * results[f].size();
    for (auto& r : results[f]) {
      if (!r) continue;
      ++out.failed_worlds;
      if (!out.failure) out.failure = std::move(r);
    }
    report.checks += out.checks;
    report.failures += out.failed_worlds;
    report.formulas.push_back(std::move(out));
  }
  return report;
}

}  // namespace

SweepReport diagram_sweep(const std::vector<FormulaPtr>& formulas, const WorldSet& ws,
                          ConceptRegistry& reg, const SweepOptions& options) {
  std::vector<Concept> concepts;
  std::vector<VarTuple> labels;
  for (const FormulaPtr& f : formulas) {
    concepts.push_back(interpret(*f, reg));
    labels.push_back(free_vars(*f));
  }

  std::vector<std::vector<std::optional<PairFailure>>> results(
      formulas.size(), std::vector<std::optional<PairFailure>>(ws.size()));
  for_each_world(ws.size(), options.threads, [&](std::size_t w) {
    EvalContext ctx(reg, ws[w], &ws);
    for (std::size_t f = 0; f < formulas.size(); ++f) {
      Relation algebraic = ctx.extension(concepts[f]).with_attrs(labels[f]);
      if (options.tamper) algebraic = options.tamper(algebraic);
      DiagramReport d = compare_extensions(tarski_eval(*formulas[f], ws[w], reg, &ws), std::move(algebraic));
      if (d.commutes) continue;
      PairFailure failure{w, d.witness.value_or(Tuple{}), d.witness_in_tarski, d.arity_mismatch};
      results[f][w] = std::move(failure);
    }
  });
  return merge(results, std::vector<std::size_t>(formulas.size(), 1));
}

SweepReport constraint_sweep(const std::vector<FormulaPtr>& formulas, const WorldSet& ws,
                             ConceptRegistry& reg, const SweepOptions& options) {
  struct Instance {
    Tuple values;
    Concept grounded;
  };
  std::vector<Concept> concepts;
  std::vector<std::vector<Instance>> instances(formulas.size());
  std::vector<std::size_t> per_world;
  for (std::size_t f = 0; f < formulas.size(); ++f) {
    concepts.push_back(interpret(*formulas[f], reg));
    const VarTuple fv = free_vars(*formulas[f]);
    for (const Tuple& values : all_tuples(ws.domain(), fv.size())) {
      Assignment g;
      for (std::size_t i = 0; i < fv.size(); ++i) g[fv[i]] = values[i];
      instances[f].push_back({values, interpret(*ground(formulas[f], g), reg)});
    }
    per_world.push_back(instances[f].size());
  }

  std::vector<std::vector<std::optional<PairFailure>>> results(
      formulas.size(), std::vector<std::optional<PairFailure>>(ws.size()));
  for_each_world(ws.size(), options.threads, [&](std::size_t w) {
    EvalContext ctx(reg, ws[w], &ws);
    for (std::size_t f = 0; f < formulas.size(); ++f) {
      Relation open = ctx.extension(concepts[f]);
      if (options.tamper) open = options.tamper(open);
      for (const Instance& inst : instances[f]) {
        const bool lhs = ctx.extension(inst.grounded).is_truth();
        if (lhs != open.contains(inst.values)) {
          results[f][w] = PairFailure{w, inst.values, false, false};
          break;
        }
      }
    }
  });
  return merge(results, per_world);
}

}  // namespace ifol
