#include <benchmark/benchmark.h>

#include "rockers/rockers.hpp"

using namespace rockers;

static void BM_LogLambda(benchmark::State& state) {
  const Natural n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_lambda(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogLambda)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

static void BM_PsiClosedForm(benchmark::State& state) {
  const Natural n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_closed_form(n));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PsiClosedForm)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

static void BM_PsiQuadrature(benchmark::State& state) {
  const Natural n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_quadrature(n, 1e-10));
  }
}
BENCHMARK(BM_PsiQuadrature)->Arg(12)->Arg(100)->Arg(300);

static void BM_LambdaValue(benchmark::State& state) {
  const Natural n(state.range(0));
  const int digits = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_value(n, digits));
  }
}
BENCHMARK(BM_LambdaValue)->Args({12, 10})->Args({12, 200})->Args({1000, 30});

static void BM_FloorPower(benchmark::State& state) {
  const std::int64_t base = state.range(0);
  const std::int64_t k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(floor_power(base, index(k)));
  }
}
BENCHMARK(BM_FloorPower)->Args({3, 2})->Args({500, 50})->Args({999, 1000});

static void BM_EscapeCount(benchmark::State& state) {
  const Natural n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(escape_count(n));
  }
}
BENCHMARK(BM_EscapeCount)->Arg(12)->Arg(200);

static void BM_BoundsThreshold(benchmark::State& state) {
  const Natural hi(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds_threshold(Natural(3), hi));
  }
}
BENCHMARK(BM_BoundsThreshold)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
