#include <benchmark/benchmark.h>

#include "modcurve/verify.hpp"

using namespace modcurve;

namespace {

// Stages past the first share one pipeline so each benchmark times one step.
Pipeline& shared() {
  static Pipeline p(PipelineConfig{kDefaultPrecision, 31, 0, false, 1});
  return p;
}

}  // namespace

static void BM_StandardBasis(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(standard_basis(prec));
}
BENCHMARK(BM_StandardBasis)->Arg(38)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_CanonicalRelations(benchmark::State& state) {
  const CuspFormBasis basis = standard_basis(kDefaultPrecision);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_relations(basis));
}
BENCHMARK(BM_CanonicalRelations)->Unit(benchmark::kMillisecond);

static void BM_CubicRank(benchmark::State& state) {
  const auto& q = shared().model().quadrics;
  for (auto _ : state) benchmark::DoNotOptimize(cubic_rank(q));
}
BENCHMARK(BM_CubicRank)->Unit(benchmark::kMillisecond);

static void BM_B0Closure(benchmark::State& state) {
  const auto gens = b0_generators().list();
  for (auto _ : state) benchmark::DoNotOptimize(closure(gens));
}
BENCHMARK(BM_B0Closure)->Unit(benchmark::kMillisecond);

static void BM_Buchberger(benchmark::State& state) {
  Pipeline& p = shared();
  const ConditionIdeal ideal = condition_ideal(symbolic_M(), p.model().quadrics);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal.generators, LexOrder::b_gt_a));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

static void BM_Census31(benchmark::State& state) {
  Pipeline& p = shared();
  const ResidueMap map = residue_map(31);
  const NFMatrix& u = p.branches()[0].raw;
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fixed_point_census(map, p.model().quadrics, u, threads));
}
BENCHMARK(BM_Census31)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
