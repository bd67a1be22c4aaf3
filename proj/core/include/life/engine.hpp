#pragma once

#include <utility>
#include <vector>

#include "life/decomposition.hpp"
#include "life/grid.hpp"

namespace life {

struct RunConfig {
  Strategy strategy = Strategy::serial();
  int workers = 1;
  int iterations = 0;
};

struct RunStats {
  int generations_computed = 0;
  // (iteration, population) pairs; the population is measured after that
  // many generations have been applied.
  std::vector<std::pair<int, int>> population_checkpoints;
};

struct RunResult {
  Grid grid;
  RunStats stats;
};

// One generation computed by `workers` workers over the strategy's
// partition. Every worker reads the frozen input buffer and writes only its
// own regions of the output buffer, so the result is cell-for-cell identical
// to step_serial(grid).
Grid step_parallel(const Grid& grid, const Strategy& strategy, int workers);

// Applies `config.iterations` generations. Workers are spawned once and
// synchronized with a full barrier between generations; the completed buffer
// is published to all workers before the next generation starts. Populations
// are recorded at the requested checkpoint generations (checkpoint 0 is the
// initial grid).
RunResult run(const Grid& initial, const RunConfig& config,
              const std::vector<int>& checkpoints = {});
RunResult run(Grid&& initial, const RunConfig& config,
              const std::vector<int>& checkpoints = {});

}  // namespace life
