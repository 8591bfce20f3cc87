#include "sqbetti/graph_enum.hpp"
#include "sqbetti/localization.hpp"

#include <benchmark/benchmark.h>

namespace {

using sqbetti::EnumerationParams;

void args(benchmark::internal::Benchmark* b) {
  b->Args({4, 4})->Args({4, 5})->Args({5, 5})->Unit(benchmark::kMillisecond);
}

EnumerationParams params(const benchmark::State& state) {
  return {static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1))};
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(sqbetti::enumerateSerial(p));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(sqbetti::enumerate(p));
}

void BM_AssembleSerial(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(sqbetti::assemblePoincareSerial(p.n, p.d));
}

void BM_AssembleParallel(benchmark::State& state) {
  const auto p = params(state);
  for (auto _ : state) benchmark::DoNotOptimize(sqbetti::assemblePoincare(p.n, p.d));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Apply(args);
BENCHMARK(BM_EnumerateParallel)->Apply(args);
BENCHMARK(BM_AssembleSerial)->Apply(args);
BENCHMARK(BM_AssembleParallel)->Apply(args);
BENCHMARK_MAIN();
