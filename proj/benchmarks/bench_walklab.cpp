#include <benchmark/benchmark.h>

#include "walklab/barrier_calculus.hpp"
#include "walklab/monte_carlo.hpp"
#include "walklab/philox.hpp"
#include "walklab/series_engine.hpp"
#include "walklab/walk_distributions.hpp"

namespace {

using walklab::ExactRational;

void BM_Binomial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::binomial(n, n / 2));
  }
}
BENCHMARK(BM_Binomial)->RangeMultiplier(10)->Range(10, 10'000);

void BM_DistributionRowExact(benchmark::State& state) {
  const walklab::WalkParams params(walklab::StepProbability::exact(ExactRational(1, 3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::distribution_row(state.range(0), params));
  }
}
BENCHMARK(BM_DistributionRowExact)->RangeMultiplier(4)->Range(16, 1024);

void BM_DistributionRowReal(benchmark::State& state) {
  const walklab::WalkParams params(walklab::StepProbability::real(0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::distribution_row(state.range(0), params));
  }
}
BENCHMARK(BM_DistributionRowReal)->RangeMultiplier(4)->Range(16, 1024);

void BM_Q2PExact(benchmark::State& state) {
  const ExactRational p(1, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::q2p(state.range(0), 2, p));
  }
}
BENCHMARK(BM_Q2PExact)->Arg(40)->Arg(400);

void BM_GammaPartialSumExact(benchmark::State& state) {
  const auto one = walklab::SeriesPoint::exact(ExactRational(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::gamma_partial_sum(state.range(0), one));
  }
}
BENCHMARK(BM_GammaPartialSumExact)->Arg(100)->Arg(1000);

void BM_GammaPartialSumReal(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::gamma_partial_sum(state.range(0), 0.9));
  }
}
BENCHMARK(BM_GammaPartialSumReal)->Arg(1000)->Arg(100'000);

void BM_PhiloxUniform(benchmark::State& state) {
  walklab::PhiloxStream stream(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.next_uniform());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxUniform);

void BM_AbsorbingWalks(benchmark::State& state) {
  walklab::SimulationConfig config;
  config.p = 0.5;
  config.max_steps = state.range(0);
  config.walks = 100'000;
  config.seed = 1;
  config.barrier = walklab::BarrierMode::delayed_at_origin;
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::run_absorbing_walks(config, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.walks));
}
BENCHMARK(BM_AbsorbingWalks)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_FreeWalks(benchmark::State& state) {
  walklab::SimulationConfig config;
  config.p = 0.5;
  config.max_steps = state.range(0);
  config.walks = 100'000;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(walklab::run_free_walks(config, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.walks));
}
BENCHMARK(BM_FreeWalks)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
