#include <benchmark/benchmark.h>

#include <limits>

#include "hde/asymptotics.hpp"
#include "hde/censor.hpp"
#include "hde/contrast.hpp"
#include "hde/estimate.hpp"
#include "hde/rng.hpp"
#include "hde/simulate.hpp"

namespace {

using namespace hde;

void BM_NormalDraws(benchmark::State& state) {
  Rng rng(12345);
  double acc = 0.0;
  for (auto _ : state) {
    acc += rng.normal();
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_NormalDraws);

void BM_EulerPath(benchmark::State& state) {
  const DiffusionModel model = builtin_model("ou");
  const SamplingScheme scheme{static_cast<std::size_t>(state.range(0)),
                              0.01, 10, 0.25, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_maruyama_path(model, ParamPoint{1.0, 1.0}, scheme));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
}
BENCHMARK(BM_EulerPath)->Arg(1000)->Arg(10000);

PartialObservations bench_observations(std::size_t n) {
  const DiffusionModel model = builtin_model("ou");
  const SamplingScheme scheme{n, 0.01, 10, 0.25, 7};
  return apply_threshold(euler_maruyama_path(model, ParamPoint{1.0, 1.0}, scheme), 0.0,
                         0.25);
}

void BM_GContrast(benchmark::State& state) {
  const DiffusionModel model = builtin_model("ou");
  const PartialObservations obs = bench_observations(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_contrast(obs, model, 1.3));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GContrast)->Arg(10000)->Arg(50000);

void BM_LContrast(benchmark::State& state) {
  const DiffusionModel model = builtin_model("ou");
  const PartialObservations obs = bench_observations(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(l_contrast(obs, model, ParamPoint{1.3, 0.8}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LContrast)->Arg(10000)->Arg(50000);

void BM_TwoStage(benchmark::State& state) {
  const DiffusionModel model = builtin_model("ou");
  const PartialObservations obs = bench_observations(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(two_stage_estimate(obs, model, ParamRectangle{}, 1e-6));
  }
}
BENCHMARK(BM_TwoStage)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_SigmaQuadrature(benchmark::State& state) {
  const DiffusionModel model = builtin_model("ou");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_quadrature(model, ParamPoint{1.0, 1.0}, 0.0));
  }
  state.SetLabel("ou tau=0");
}
BENCHMARK(BM_SigmaQuadrature)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
