#include <benchmark/benchmark.h>
#include <omp.h>

#include "cliquecover/canonical.hpp"
#include "cliquecover/constructions.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/sweep.hpp"
#include "cliquecover/symmetrize.hpp"

namespace cc = cliquecover;

namespace {

cc::Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? cc::Execution::kSerial : cc::Execution::kParallel;
}

void set_label(benchmark::State& state) {
  state.SetLabel(state.range(1) == 0 ? "serial" : "openmp x" + std::to_string(omp_get_max_threads()));
}

void BM_EnumerateGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cc::enumerate_graphs(static_cast<int>(state.range(0)), mode(state)));
  set_label(state);
}
BENCHMARK(BM_EnumerateGraphs)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state, const char* predicate, int t) {
  cc::SweepOptions o;
  o.predicate = predicate;
  o.n_max = static_cast<int>(state.range(0));
  o.t = t;
  o.execution = mode(state);
  for (auto _ : state) {
    auto report = cc::sweep(o);
    if (!report.ok()) state.SkipWithError("predicate violated");
    benchmark::DoNotOptimize(report);
  }
  set_label(state);
}
BENCHMARK_CAPTURE(BM_Sweep, egp_cover, "egp_cover", 2)->ArgsProduct({{6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, erdos_conjecture, "erdos_conjecture", 2)
    ->ArgsProduct({{6}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, chain_inequalities, "chain_inequalities", 2)
    ->ArgsProduct({{5}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_IntegerCoverGap(benchmark::State& state) {
  auto g = cc::gap_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cc::integer_cover_number(g, 2, cc::CostVector::ones()));
}
BENCHMARK(BM_IntegerCoverGap)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Symmetrize(benchmark::State& state) {
  auto g = cc::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cc::symmetrize_to_multipartite(g, 2, cc::CostVector::ones(), cc::Problem::kCover));
}
BENCHMARK(BM_Symmetrize)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
