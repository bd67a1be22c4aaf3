// Microbenchmarks for the generation kernel and the decomposition
// strategies. These complement `life-bench bench`, which measures whole
// multi-generation runs; here single steps are isolated so kernel changes
// show up without scheduler noise.

#include <benchmark/benchmark.h>

#include "life/engine.hpp"
#include "life/pattern.hpp"

namespace {

life::Grid soup(int width, int height) {
  return life::random_fill(width, height, 0.3, 42);
}

void BM_step_serial(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  const int height = static_cast<int>(state.range(1));
  const life::Grid grid = soup(width, height);
  for (auto _ : state) {
    benchmark::DoNotOptimize(life::step_serial(grid));
  }
  state.SetItemsProcessed(state.iterations() * width * height);
}
BENCHMARK(BM_step_serial)->Args({120, 60})->Args({240, 120});

void BM_step_engine_serial(benchmark::State& state) {
  const int width = static_cast<int>(state.range(0));
  const int height = static_cast<int>(state.range(1));
  const life::Grid grid = soup(width, height);
  for (auto _ : state) {
    benchmark::DoNotOptimize(life::step_parallel(grid, life::Strategy::serial(), 1));
  }
  state.SetItemsProcessed(state.iterations() * width * height);
}
BENCHMARK(BM_step_engine_serial)->Args({120, 60})->Args({240, 120});

void BM_run_rows(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  const life::Grid grid = soup(240, 120);
  const life::RunConfig config{life::Strategy::rows(), workers, 100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(life::run(grid, config));
  }
  state.SetItemsProcessed(state.iterations() * 100 * 240 * 120);
}
BENCHMARK(BM_run_rows)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_run_blocks(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  const life::Grid grid = soup(240, 120);
  const life::RunConfig config{life::Strategy::blocks(2, 2), workers, 100};
  for (auto _ : state) {
    benchmark::DoNotOptimize(life::run(grid, config));
  }
  state.SetItemsProcessed(state.iterations() * 100 * 240 * 120);
}
BENCHMARK(BM_run_blocks)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_random_fill(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(life::random_fill(240, 120, 0.3, 42));
  }
}
BENCHMARK(BM_random_fill);

}  // namespace

BENCHMARK_MAIN();
