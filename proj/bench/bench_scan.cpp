#include <benchmark/benchmark.h>

#include "mensura/oracle.hpp"

using namespace mensura;

namespace {

const QuadSides kWorked(75, 40, 51, 68);

void BM_ScanReference(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const int digits = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(reference::area_scan(kWorked, steps, digits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ScanParallel(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const int digits = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(area_scan(kWorked, steps, digits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ScanReference)->Args({999, 50})->Args({999, 200})->Args({9999, 50})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Args({999, 50})->Args({999, 200})->Args({9999, 50})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
