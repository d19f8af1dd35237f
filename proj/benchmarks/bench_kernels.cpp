#include <benchmark/benchmark.h>

#include "littlewood/littlewood.hpp"

using namespace littlewood;

namespace {

BinarySequence random_sequence(std::size_t n) {
  CounterRng rng(1);
  return sample_uniform(ClassSpec(ClassKind::All, n), rng);
}

void BM_AutocorrelationReference(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation_reference(seq));
}
BENCHMARK(BM_AutocorrelationReference)->RangeMultiplier(4)->Range(64, 4096);

void BM_AutocorrelationBitParallel(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sum_c_squared(seq));
}
BENCHMARK(BM_AutocorrelationBitParallel)->RangeMultiplier(4)->Range(64, 4096);

void BM_Quadrature(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l4_by_quadrature(seq));
}
BENCHMARK(BM_Quadrature)->RangeMultiplier(4)->Range(64, 1024);

// Whole-class power sums, single thread; items are class members.
void BM_EnumerationThroughput(benchmark::State& state) {
  const ClassSpec spec(ClassKind::All, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_power_sums(spec, 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.class_size()));
}
BENCHMARK(BM_EnumerationThroughput)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const ClassSpec spec(ClassKind::All, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_values(spec, 10000, 42, 1));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MonteCarlo)->Arg(101)->Arg(1601)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
