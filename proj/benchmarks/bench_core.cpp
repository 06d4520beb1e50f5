#include <benchmark/benchmark.h>

#include "commands.hpp"
#include "lurkit/lur.hpp"
#include "lurkit/states.hpp"
#include "lurkit/witnesses.hpp"

using namespace lurkit;

static void BM_MakeBoundState(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(make_bound_state(0.3077).rho.data());
}
BENCHMARK(BM_MakeBoundState);

static void BM_EigHermitian9(benchmark::State& state) {
  const ComplexMatrix rho = make_bound_state(0.3077).rho;
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(rho).sum());
}
BENCHMARK(BM_EigHermitian9);

static void BM_PptCheck(benchmark::State& state) {
  const BipartiteState st = make_bound_state(0.3077);
  for (auto _ : state) benchmark::DoNotOptimize(ppt_check(st).min_eigenvalue);
}
BENCHMARK(BM_PptCheck);

static void BM_LurSum(benchmark::State& state) {
  const BipartiteState st = make_bound_state(0.3077);
  const OperatorPairing pairing = make_aligned_pairing(0.3077);
  for (auto _ : state) benchmark::DoNotOptimize(lur_sum(st, pairing));
}
BENCHMARK(BM_LurSum);

static void BM_OptimalKTotal(benchmark::State& state) {
  const BipartiteState st = make_bound_state(0.3077);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_k_total(st));
}
BENCHMARK(BM_OptimalKTotal);

static void BM_SweepRow(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cli::compute_sweep_row(0.3077, 0.0).c_lur);
}
BENCHMARK(BM_SweepRow);

static void BM_SampleSeparable(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_separable(seed++, 9).rho.data());
}
BENCHMARK(BM_SampleSeparable);

BENCHMARK_MAIN();
