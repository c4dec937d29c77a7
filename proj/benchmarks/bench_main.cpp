#include <benchmark/benchmark.h>

#include "antifactor/degree_spec.hpp"
#include "antifactor/generators.hpp"
#include "antifactor/matching.hpp"
#include "antifactor/oracle.hpp"
#include "antifactor/solver.hpp"

using namespace antifactor;

static void BM_SolveRegular(benchmark::State& state) {
  const BipartiteGraph g = gen::random_regular_bipartite(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_regular(g));
}
BENCHMARK(BM_SolveRegular)->Arg(1'000)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_SolveCycle(benchmark::State& state) {
  const BipartiteGraph g = gen::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_anti_factor(g));
}
// 4m + 2 is UNSAT, so the whole tree is explored.
BENCHMARK(BM_SolveCycle)->Arg(42)->Arg(202)->Arg(2002);

static void BM_PerfectMatching(benchmark::State& state) {
  const BipartiteGraph g = gen::random_regular_bipartite(static_cast<int>(state.range(0)), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching(g));
}
BENCHMARK(BM_PerfectMatching)->Arg(1'000)->Arg(10'000)->Unit(benchmark::kMicrosecond);

static void BM_ExtractThreeFactor(benchmark::State& state) {
  const BipartiteGraph g = gen::random_regular_bipartite(static_cast<int>(state.range(0)), 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(extract_regular_factor(g, 3));
}
BENCHMARK(BM_ExtractThreeFactor)->Arg(1'000)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_OracleSweep(benchmark::State& state) {
  const BipartiteGraph g = gen::random_bipartite(5, 5, 0.7, 4);
  const DegreeSpec spec = make_spec(SpecKind::OnePm, g);
  oracle::Config cfg;
  cfg.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sweep(g, spec, cfg));
}
BENCHMARK(BM_OracleSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_StructureAudit(benchmark::State& state) {
  const BipartiteGraph g = gen::theta_graph({5, 5, 5}, Side::Y);
  const DegreeSpec spec = make_spec(SpecKind::OnePm, g);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::structure_audit(g, spec));
}
BENCHMARK(BM_StructureAudit)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
