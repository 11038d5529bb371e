#include <benchmark/benchmark.h>

#include "ifol/generator.hpp"
#include "ifol/io.hpp"
#include "ifol/sweep.hpp"
#include "ifol/worlds.hpp"

namespace {

using namespace ifol;

Signature bench_signature() {
  Signature sig;
  sig.add_predicate("p", 1);
  sig.add_predicate("q", 2);
  sig.add_constant("c");
  return sig;
}

const WorldSet& bench_worlds() {
  static const WorldSet ws =
      enumerate_worlds(bench_signature(), {DomainElement::particular("a"), DomainElement::particular("b")},
                       {{"c", DomainElement::particular("a")}});
  return ws;
}

std::vector<FormulaPtr> bench_formulas(std::size_t n) {
  GeneratorOptions o;
  o.elements = {"a", "b"};
  return random_formulas(bench_signature(), o, 42, n);
}

void BM_Parse(benchmark::State& state) {
  const Signature sig = bench_signature();
  std::vector<std::string> texts;
  for (const FormulaPtr& f : bench_formulas(200)) texts.push_back(to_string(*f));
  for (auto _ : state) {
    for (const std::string& t : texts) benchmark::DoNotOptimize(parse_formula(t, sig));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(texts.size()));
}
BENCHMARK(BM_Parse);

void BM_Interpret(benchmark::State& state) {
  const auto fs = bench_formulas(200);
  for (auto _ : state) {
    ConceptRegistry reg;
    for (const FormulaPtr& f : fs) benchmark::DoNotOptimize(interpret(*f, reg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}
BENCHMARK(BM_Interpret);

void BM_Extensionalize(benchmark::State& state) {
  const auto fs = bench_formulas(200);
  ConceptRegistry reg;
  std::vector<Concept> us;
  for (const FormulaPtr& f : fs) us.push_back(interpret(*f, reg));
  const World& w = bench_worlds()[37];
  for (auto _ : state) {
    EvalContext ctx(reg, w, &bench_worlds());
    for (Concept u : us) benchmark::DoNotOptimize(ctx.extension(u));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(us.size()));
}
BENCHMARK(BM_Extensionalize);

void BM_TarskiEval(benchmark::State& state) {
  const auto fs = bench_formulas(200);
  ConceptRegistry reg;
  const World& w = bench_worlds()[37];
  for (auto _ : state) {
    for (const FormulaPtr& f : fs) benchmark::DoNotOptimize(tarski_eval(*f, w, reg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}
BENCHMARK(BM_TarskiEval);

void BM_DiagramSweep(benchmark::State& state) {
  const auto fs = bench_formulas(static_cast<std::size_t>(state.range(0)));
  SweepOptions opts;
  opts.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    ConceptRegistry reg;
    benchmark::DoNotOptimize(diagram_sweep(fs, bench_worlds(), reg, opts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(bench_worlds().size()));
}
BENCHMARK(BM_DiagramSweep)->Args({100, 1})->Args({100, 0})->Unit(benchmark::kMillisecond);

void BM_EnumerateWorlds(benchmark::State& state) {
  const Signature sig = bench_signature();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_worlds(
        sig, {DomainElement::particular("a"), DomainElement::particular("b")}, {{"c", DomainElement::particular("a")}}));
  }
}
BENCHMARK(BM_EnumerateWorlds);

}  // namespace

BENCHMARK_MAIN();
