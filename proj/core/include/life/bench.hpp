#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "life/decomposition.hpp"

namespace life {

// SP = serial execution time / parallel execution time.
// Throws NonPositiveTime unless both times are > 0.
double speedup(double serial_time_s, double parallel_time_s);

// Middle value for odd counts, mean of the two middle values for even
// counts. Invariant under permutation of the input.
double median(std::vector<double> values);

struct GridSize {
  int width = 0;
  int height = 0;

  friend bool operator==(const GridSize&, const GridSize&) = default;
};

// One timed cell of the benchmark matrix.
struct TimingSpec {
  int width = 0;
  int height = 0;
  int iterations = 1;
  Strategy strategy = Strategy::serial();
  int workers = 1;
  std::uint64_t seed = 42;
  double density = 0.3;
  int repetitions = 5;
  int warmup_runs = 1;
};

struct BenchRecord {
  int width = 0;
  int height = 0;
  int iterations = 0;
  Strategy strategy = Strategy::serial();
  int workers = 1;
  std::uint64_t seed = 0;
  double density = 0.0;
  int repetitions = 0;
  std::vector<double> all_times_s;  // one entry per repetition, > 0
  double median_s = 0.0;
  // Ratio vs. the serial baseline of the same (dims, iterations, seed) from
  // the same matrix run. A record standing alone is its own baseline (1.0).
  double speedup = 1.0;
  unsigned hardware_threads = 0;
  int final_population = 0;
};

// Builds the initial soup once, performs the untimed warmup runs, then times
// `repetitions` full runs of the generation loop (monotonic clock, grid
// construction and I/O excluded). Every timed run starts from the same
// initial grid.
BenchRecord time_run(const TimingSpec& spec);

struct BenchConfig {
  std::vector<GridSize> sizes;
  std::vector<int> iteration_counts;
  std::vector<Strategy> strategies;
  std::vector<int> worker_counts;
  int repetitions = 5;
  int warmup_runs = 1;
  std::uint64_t seed = 42;
  double density = 0.3;
  std::vector<int> checkpoints;  // optional population capture schedule
};

// Full sweep, sizes x iteration counts x (strategy, workers). Each
// (size, iterations) cell starts with its serial baseline record, the
// speedup denominator for that cell, followed by every parallel strategy at
// every worker count >= 2, workers ascending. A worker count of 1 is the
// serial baseline row itself, so parallel strategies skip it. Runs execute
// sequentially; `on_record` (when set) is called after each finished record.
std::vector<BenchRecord> bench_matrix(
    const BenchConfig& config,
    const std::function<void(const BenchRecord&)>& on_record = {});

// Population at each checkpoint generation of a seeded soup run under the
// given strategy.
std::vector<std::pair<int, int>> population_series(int width, int height,
                                                   std::uint64_t seed, double density,
                                                   const Strategy& strategy, int workers,
                                                   const std::vector<int>& checkpoints);

// CSV with header
//   width,height,iterations,strategy,workers,seed,density,repetitions,
//   median_s,speedup,hardware_threads,final_population
// one row per record, times with 3 decimals, speedup with 2.
std::string emit_csv(const std::vector<BenchRecord>& records);

}  // namespace life
