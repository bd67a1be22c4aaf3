#include "life/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <thread>

#include "life/engine.hpp"
#include "life/pattern.hpp"

namespace life {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_bench_config(const BenchConfig& config) {
  if (config.sizes.empty()) throw ConfigError("benchmark size list is empty");
  if (config.iteration_counts.empty()) throw ConfigError("benchmark iteration list is empty");
  if (config.strategies.empty()) throw ConfigError("benchmark strategy list is empty");
  if (config.worker_counts.empty()) throw ConfigError("benchmark worker list is empty");
  for (int it : config.iteration_counts) {
    if (it < 1) throw ConfigError("iteration counts must be at least 1");
  }
  for (int w : config.worker_counts) {
    if (w < 1) throw ConfigError("worker counts must be at least 1");
  }
  if (config.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (config.warmup_runs < 0) throw ConfigError("warmup runs must be non-negative");
  if (!(config.density >= 0.0 && config.density <= 1.0)) {
    throw ConfigError("density must be in [0, 1]");
  }
  int prev = -1;
  const int min_iterations =
      *std::min_element(config.iteration_counts.begin(), config.iteration_counts.end());
  for (int cp : config.checkpoints) {
    if (cp <= prev) throw ConfigError("checkpoints must be strictly ascending");
    if (cp < 0 || cp > min_iterations) {
      throw ConfigError("checkpoint " + std::to_string(cp) +
                        " exceeds the smallest iteration count");
    }
    prev = cp;
  }
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << value;
  return os.str();
}

}  // namespace

double speedup(double serial_time_s, double parallel_time_s) {
  if (!(serial_time_s > 0.0) || !(parallel_time_s > 0.0)) {
    throw NonPositiveTime();
  }
  return serial_time_s / parallel_time_s;
}

double median(std::vector<double> values) {
  if (values.empty()) {
    throw ConfigError("median of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

BenchRecord time_run(const TimingSpec& spec) {
  if (spec.repetitions < 1) throw ConfigError("repetitions must be at least 1");
  if (spec.warmup_runs < 0) throw ConfigError("warmup runs must be non-negative");
  if (spec.iterations < 1) throw ConfigError("iteration count must be at least 1");

  const Grid initial = random_fill(spec.width, spec.height, spec.density, spec.seed);
  const RunConfig run_config{spec.strategy, spec.workers, spec.iterations};

  for (int i = 0; i < spec.warmup_runs; ++i) {
    (void)run(initial, run_config);
  }

  BenchRecord record;
  record.width = spec.width;
  record.height = spec.height;
  record.iterations = spec.iterations;
  record.strategy = spec.strategy;
  record.workers = spec.strategy.is_serial() ? 1 : spec.workers;
  record.seed = spec.seed;
  record.density = spec.density;
  record.repetitions = spec.repetitions;
  record.hardware_threads = std::thread::hardware_concurrency();

  record.all_times_s.reserve(static_cast<std::size_t>(spec.repetitions));
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    Grid start = initial;  // copied outside the timed region
    const auto t0 = Clock::now();
    RunResult result = run(std::move(start), run_config);
    record.all_times_s.push_back(seconds_since(t0));
    record.final_population = population(result.grid);
  }
  record.median_s = median(record.all_times_s);
  record.speedup = 1.0;
  return record;
}

std::vector<BenchRecord> bench_matrix(
    const BenchConfig& config, const std::function<void(const BenchRecord&)>& on_record) {
  check_bench_config(config);

  std::vector<int> workers = config.worker_counts;
  std::sort(workers.begin(), workers.end());
  workers.erase(std::unique(workers.begin(), workers.end()), workers.end());

  std::vector<Strategy> parallel_strategies;
  for (const Strategy& s : config.strategies) {
    if (!s.is_serial() &&
        std::find(parallel_strategies.begin(), parallel_strategies.end(), s) ==
            parallel_strategies.end()) {
      parallel_strategies.push_back(s);
    }
  }

  std::vector<BenchRecord> records;
  for (const GridSize& size : config.sizes) {
    for (const int iterations : config.iteration_counts) {
      TimingSpec spec;
      spec.width = size.width;
      spec.height = size.height;
      spec.iterations = iterations;
      spec.seed = config.seed;
      spec.density = config.density;
      spec.repetitions = config.repetitions;
      spec.warmup_runs = config.warmup_runs;

      // Serial baseline first: it is the speedup denominator for this cell.
      spec.strategy = Strategy::serial();
      spec.workers = 1;
      BenchRecord baseline = time_run(spec);
      baseline.speedup = 1.0;
      const double serial_median = baseline.median_s;
      if (on_record) on_record(baseline);
      records.push_back(std::move(baseline));

      for (const Strategy& strategy : parallel_strategies) {
        for (const int w : workers) {
          if (w < 2) continue;  // the 1-worker cell is the serial baseline row
          spec.strategy = strategy;
          spec.workers = w;
          BenchRecord record = time_run(spec);
          record.speedup = speedup(serial_median, record.median_s);
          if (on_record) on_record(record);
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

std::vector<std::pair<int, int>> population_series(int width, int height, std::uint64_t seed,
                                                   double density, const Strategy& strategy,
                                                   int workers,
                                                   const std::vector<int>& checkpoints) {
  const int iterations = checkpoints.empty() ? 0 : checkpoints.back();
  Grid initial = random_fill(width, height, density, seed);
  RunResult result =
      run(std::move(initial), RunConfig{strategy, workers, iterations}, checkpoints);
  return std::move(result.stats.population_checkpoints);
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "width,height,iterations,strategy,workers,seed,density,repetitions,"
      "median_s,speedup,hardware_threads,final_population\n";
  for (const BenchRecord& r : records) {
    std::ostringstream row;
    row << r.width << ',' << r.height << ',' << r.iterations << ',' << to_string(r.strategy)
        << ',' << r.workers << ',' << r.seed << ',' << r.density << ',' << r.repetitions
        << ',' << format_fixed(r.median_s, 3) << ',' << format_fixed(r.speedup, 2) << ','
        << r.hardware_threads << ',' << r.final_population << '\n';
    out += row.str();
  }
  return out;
}

}  // namespace life
