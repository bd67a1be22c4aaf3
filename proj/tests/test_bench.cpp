#include "life/bench.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "life/engine.hpp"
#include "life/pattern.hpp"
#include "test_support.hpp"

using life::BenchConfig;
using life::BenchRecord;
using life::Strategy;
using life::TimingSpec;

namespace {

double rounded2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace

TEST_CASE("speedup matches the reference ratios") {
  CHECK(rounded2(life::speedup(28.144, 13.630)) == doctest::Approx(2.06).epsilon(1e-12));
  CHECK(rounded2(life::speedup(108.633, 36.824)) == doctest::Approx(2.95).epsilon(1e-12));
  CHECK(rounded2(life::speedup(436.149, 126.420)) == doctest::Approx(3.45).epsilon(1e-12));
  CHECK(rounded2(life::speedup(28.144, 18.252)) == doctest::Approx(1.54).epsilon(1e-12));
}

TEST_CASE("speedup of a time against itself is exactly 1") {
  for (double t : {0.001, 1.0, 28.144, 436.149}) {
    CHECK(life::speedup(t, t) == 1.0);
  }
}

TEST_CASE("speedup rejects non-positive times") {
  CHECK_THROWS_AS(life::speedup(0.0, 1.0), life::NonPositiveTime);
  CHECK_THROWS_AS(life::speedup(1.0, 0.0), life::NonPositiveTime);
  CHECK_THROWS_AS(life::speedup(-1.0, 2.0), life::NonPositiveTime);
}

TEST_CASE("median picks the middle value and tolerates permutations") {
  CHECK(life::median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(life::median({5.0}) == 5.0);
  CHECK(life::median({4.0, 1.0, 3.0, 2.0}) == 2.5);

  std::vector<double> times = {0.9, 0.2, 0.5, 0.7, 0.4};
  std::sort(times.begin(), times.end());
  do {
    CHECK(life::median(times) == 0.5);
  } while (std::next_permutation(times.begin(), times.end()));

  CHECK_THROWS_AS(life::median({}), life::ConfigError);
}

TEST_CASE("time_run echoes its configuration and times every repetition") {
  TimingSpec spec;
  spec.width = 32;
  spec.height = 24;
  spec.iterations = 5;
  spec.strategy = Strategy::rows();
  spec.workers = 2;
  spec.seed = 1;
  spec.density = 0.3;
  spec.repetitions = 3;
  spec.warmup_runs = 1;

  const BenchRecord record = life::time_run(spec);
  CHECK(record.width == 32);
  CHECK(record.height == 24);
  CHECK(record.iterations == 5);
  CHECK(record.strategy == Strategy::rows());
  CHECK(record.workers == 2);
  CHECK(record.seed == 1);
  CHECK(record.repetitions == 3);
  REQUIRE(record.all_times_s.size() == 3);
  for (double t : record.all_times_s) CHECK(t > 0.0);

  std::vector<double> sorted = record.all_times_s;
  std::sort(sorted.begin(), sorted.end());
  CHECK(record.median_s == sorted[1]);
  CHECK(record.speedup == 1.0);
  CHECK(record.hardware_threads >= 1);
}

TEST_CASE("final_population does not depend on strategy or measurement settings") {
  const auto expected = life::population(
      life::run(life::random_fill(32, 24, 0.3, 9), {Strategy::serial(), 1, 6}).grid);

  TimingSpec spec;
  spec.width = 32;
  spec.height = 24;
  spec.iterations = 6;
  spec.seed = 9;
  spec.density = 0.3;

  for (const Strategy& s :
       {Strategy::serial(), Strategy::rows(), Strategy::cols(), Strategy::blocks(2, 2)}) {
    for (int workers : {1, 2, 4}) {
      for (int reps : {1, 3}) {
        spec.strategy = s;
        spec.workers = workers;
        spec.repetitions = reps;
        spec.warmup_runs = reps % 2;
        CHECK(life::time_run(spec).final_population == expected);
      }
    }
  }
}

TEST_CASE("bench_matrix emits baseline-first cells with parallel workers >= 2") {
  BenchConfig config;
  config.sizes = {{16, 12}};
  config.iteration_counts = {3, 5};
  config.strategies = {Strategy::serial(), Strategy::rows(), Strategy::blocks(2, 2)};
  config.worker_counts = {1, 2, 4};
  config.repetitions = 2;
  config.warmup_runs = 0;
  config.seed = 4;

  int callbacks = 0;
  const auto records =
      life::bench_matrix(config, [&](const BenchRecord&) { ++callbacks; });

  // Per (size, iterations) cell: serial baseline + 2 strategies x workers {2,4}.
  REQUIRE(records.size() == 2 * (1 + 2 * 2));
  CHECK(callbacks == static_cast<int>(records.size()));

  for (std::size_t cell = 0; cell < 2; ++cell) {
    const std::size_t base = cell * 5;
    CHECK(records[base].strategy == Strategy::serial());
    CHECK(records[base].workers == 1);
    CHECK(records[base].speedup == 1.0);
    CHECK(records[base + 1].strategy == Strategy::rows());
    CHECK(records[base + 1].workers == 2);
    CHECK(records[base + 2].strategy == Strategy::rows());
    CHECK(records[base + 2].workers == 4);
    CHECK(records[base + 3].strategy == Strategy::blocks(2, 2));
    CHECK(records[base + 3].workers == 2);
    CHECK(records[base + 4].strategy == Strategy::blocks(2, 2));
    CHECK(records[base + 4].workers == 4);

    // Simulation results are measurement-independent across the cell.
    for (std::size_t i = 1; i < 5; ++i) {
      CHECK(records[base + i].final_population == records[base].final_population);
      CHECK(records[base + i].speedup ==
            life::speedup(records[base].median_s, records[base + i].median_s));
    }
  }

  CHECK(records[0].iterations == 3);
  CHECK(records[5].iterations == 5);
}

TEST_CASE("bench_matrix validates its configuration") {
  BenchConfig config;
  config.sizes = {{16, 12}};
  config.iteration_counts = {3};
  config.strategies = {Strategy::serial()};
  config.worker_counts = {};
  CHECK_THROWS_AS(life::bench_matrix(config), life::ConfigError);

  config.worker_counts = {1};
  config.iteration_counts = {};
  CHECK_THROWS_AS(life::bench_matrix(config), life::ConfigError);

  config.iteration_counts = {3};
  config.repetitions = 0;
  CHECK_THROWS_AS(life::bench_matrix(config), life::ConfigError);

  config.repetitions = 1;
  config.checkpoints = {5};  // exceeds the smallest iteration count
  CHECK_THROWS_AS(life::bench_matrix(config), life::ConfigError);
}

TEST_CASE("population_series reports the requested checkpoints") {
  const auto zeros = life::population_series(16, 12, 1, 0.0, Strategy::rows(), 2, {1, 3, 5});
  REQUIRE(zeros.size() == 3);
  for (const auto& [iteration, pop] : zeros) CHECK(pop == 0);
  CHECK(zeros[0].first == 1);
  CHECK(zeros[2].first == 5);

  // Against the serial oracle, checkpoint by checkpoint.
  life::Grid g = life::random_fill(20, 14, 0.3, 8);
  std::vector<std::pair<int, int>> expected;
  for (int it = 1; it <= 4; ++it) {
    g = life::step_serial(g);
    expected.emplace_back(it, life::population(g));
  }
  CHECK(life::population_series(20, 14, 8, 0.3, Strategy::blocks(2, 2), 4, {1, 2, 3, 4}) ==
        expected);
}

TEST_CASE("emit_csv writes the pinned header and formats") {
  CHECK(life::emit_csv({}) ==
        "width,height,iterations,strategy,workers,seed,density,repetitions,"
        "median_s,speedup,hardware_threads,final_population\n");

  BenchRecord record;
  record.width = 120;
  record.height = 60;
  record.iterations = 500;
  record.strategy = Strategy::blocks(2, 2);
  record.workers = 4;
  record.seed = 42;
  record.density = 0.3;
  record.repetitions = 5;
  record.median_s = 13.6295;
  record.speedup = 2.0648;
  record.hardware_threads = 4;
  record.final_population = 777;

  const std::string csv = life::emit_csv({record});
  const auto rows = life::test::parse_csv(csv);
  REQUIRE(rows.size() == 2);
  REQUIRE(rows[1].size() == 12);
  CHECK(rows[1][0] == "120");
  CHECK(rows[1][3] == "blocks:2x2");
  CHECK(rows[1][4] == "4");
  CHECK(rows[1][5] == "42");
  CHECK(rows[1][6] == "0.3");
  CHECK(rows[1][8] == "13.630");  // three decimals, rounded
  CHECK(rows[1][9] == "2.06");    // two decimals
  CHECK(rows[1][11] == "777");
}

TEST_CASE("csv numbers survive a round trip within formatting precision") {
  BenchConfig config;
  config.sizes = {{16, 12}};
  config.iteration_counts = {2};
  config.strategies = {Strategy::serial(), Strategy::cols()};
  config.worker_counts = {1, 2};
  config.repetitions = 1;
  config.warmup_runs = 0;

  const auto records = life::bench_matrix(config);
  const auto rows = life::test::parse_csv(life::emit_csv(records));
  REQUIRE(rows.size() == records.size() + 1);

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& fields = rows[i + 1];
    REQUIRE(fields.size() == 12);
    CHECK(std::stoi(fields[0]) == records[i].width);
    CHECK(std::stoi(fields[1]) == records[i].height);
    CHECK(std::stoi(fields[2]) == records[i].iterations);
    CHECK(fields[3] == life::to_string(records[i].strategy));
    CHECK(std::stoi(fields[4]) == records[i].workers);
    CHECK(std::stoull(fields[5]) == records[i].seed);
    CHECK(std::stod(fields[6]) == doctest::Approx(records[i].density).epsilon(1e-9));
    CHECK(std::stoi(fields[7]) == records[i].repetitions);
    CHECK(std::abs(std::stod(fields[8]) - records[i].median_s) <= 0.0005);
    CHECK(std::abs(std::stod(fields[9]) - records[i].speedup) <= 0.005);
    CHECK(std::stoi(fields[11]) == records[i].final_population);
  }
}

TEST_CASE("serial baseline rows always report speedup 1.00 in CSV") {
  BenchConfig config;
  config.sizes = {{16, 12}, {12, 16}};
  config.iteration_counts = {2};
  config.strategies = {Strategy::serial(), Strategy::rows()};
  config.worker_counts = {1, 2};
  config.repetitions = 1;
  config.warmup_runs = 0;

  const auto rows = life::test::parse_csv(life::emit_csv(life::bench_matrix(config)));
  int serial_rows = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][3] == "serial") {
      CHECK(rows[i][9] == "1.00");
      ++serial_rows;
    }
  }
  CHECK(serial_rows == 2);
}
