// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ballot/counts.hpp"
#include "ballot/oracle.hpp"

namespace {

using namespace ballot;

// A dense four-variable operand: the product has many slices to fill.
MultiSeries operand(int order) {
  const SeriesCatalog cat(order);
  return cat.Axy() + cat.Bxy();
}

void BM_MulReference(benchmark::State& state) {
  const auto a = operand(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul_reference(a, a));
}

void BM_MulSerial(benchmark::State& state) {
  const auto a = operand(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, a, Exec::Serial));
}

void BM_MulParallel(benchmark::State& state) {
  const auto a = operand(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, a, Exec::Parallel));
}

template <Exec E>
void BM_OracleBFactor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_b_factor(n, OracleOptions{false, E}));
}

template <Exec E>
void BM_OraclePCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_p_cyclic(n, OracleOptions{false, E}));
}

}  // namespace

BENCHMARK(BM_MulReference)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MulParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleBFactor<Exec::Serial>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleBFactor<Exec::Parallel>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OraclePCyclic<Exec::Serial>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OraclePCyclic<Exec::Parallel>)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
