#include "life/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace life {

namespace {

// Next-generation kernel for one rectangular region. Reads only `src`,
// writes only cells inside the region of `dst`. Torus edges are peeled out
// of the inner loop so the interior runs without wrap arithmetic.
void compute_region(const Grid& src, Grid& dst, const SubRegion& region) {
  const int w = src.width();
  const int h = src.height();
  const std::uint8_t* cells = src.data();
  std::uint8_t* out = dst.data();

  for (int y = region.y0; y < region.y1; ++y) {
    const std::uint8_t* up = cells + static_cast<std::size_t>(y == 0 ? h - 1 : y - 1) * w;
    const std::uint8_t* mid = cells + static_cast<std::size_t>(y) * w;
    const std::uint8_t* down = cells + static_cast<std::size_t>(y == h - 1 ? 0 : y + 1) * w;
    std::uint8_t* row_out = out + static_cast<std::size_t>(y) * w;

    auto emit = [&](int x, int xl, int xr) {
      const int n = up[xl] + up[x] + up[xr] + mid[xl] + mid[xr] + down[xl] + down[x] +
                    down[xr];
      row_out[x] = static_cast<std::uint8_t>((n == 3) | ((n == 2) & mid[x]));
    };

    int x = region.x0;
    if (x == 0) {
      emit(0, w - 1, 1);
      x = 1;
    }
    const int interior_end = std::min(region.x1, w - 1);
    for (; x < interior_end; ++x) {
      emit(x, x - 1, x + 1);
    }
    if (region.x1 == w && w - 1 >= region.x0) {
      emit(w - 1, w - 2, 0);
    }
  }
}

// Spin briefly before falling back to a blocking futex wait, so barriers are
// cheap when cores are free and do not burn a scheduler quantum when they
// are not (for example with more workers than hardware threads).
constexpr int kSpinRounds = 256;

// Persistent worker threads driven by an epoch counter. run() executes the
// job on every worker (the calling thread acts as worker 0) and returns only
// after all workers finished; that return is the generation barrier, and the
// acquire/release pairing on `epoch_`/`done_` publishes each worker's writes
// to everyone before the next generation starts.
class WorkerTeam {
 public:
  explicit WorkerTeam(int workers) : size_(workers) {
    threads_.reserve(static_cast<std::size_t>(size_ - 1));
    for (int i = 1; i < size_; ++i) {
      threads_.emplace_back([this, i] { worker_loop(i); });
    }
  }

  WorkerTeam(const WorkerTeam&) = delete;
  WorkerTeam& operator=(const WorkerTeam&) = delete;

  ~WorkerTeam() {
    job_ = nullptr;
    epoch_.fetch_add(1, std::memory_order_release);
    epoch_.notify_all();
    for (auto& t : threads_) t.join();
  }

  void run(const std::function<void(int)>& job) {
    job_ = &job;
    done_.store(0, std::memory_order_relaxed);
    epoch_.fetch_add(1, std::memory_order_release);
    epoch_.notify_all();

    job(0);

    const int expected = size_ - 1;
    for (int spin = 0; spin < kSpinRounds; ++spin) {
      if (done_.load(std::memory_order_acquire) == expected) return;
    }
    int seen = done_.load(std::memory_order_acquire);
    while (seen != expected) {
      done_.wait(seen, std::memory_order_acquire);
      seen = done_.load(std::memory_order_acquire);
    }
  }

 private:
  void worker_loop(int index) {
    std::uint64_t last = 0;
    for (;;) {
      std::uint64_t epoch = epoch_.load(std::memory_order_acquire);
      for (int spin = 0; epoch == last && spin < kSpinRounds; ++spin) {
        epoch = epoch_.load(std::memory_order_acquire);
      }
      while (epoch == last) {
        epoch_.wait(last, std::memory_order_acquire);
        epoch = epoch_.load(std::memory_order_acquire);
      }
      last = epoch;

      const std::function<void(int)>* job = job_;
      if (job == nullptr) return;
      (*job)(index);
      done_.fetch_add(1, std::memory_order_release);
      done_.notify_one();
    }
  }

  const int size_;
  const std::function<void(int)>* job_ = nullptr;
  std::atomic<std::uint64_t> epoch_{0};
  std::atomic<int> done_{0};
  std::vector<std::thread> threads_;
};

void check_run_config(const RunConfig& config, const std::vector<int>& checkpoints) {
  if (config.workers < 1) {
    throw ConfigError("worker count must be at least 1, got " +
                      std::to_string(config.workers));
  }
  if (config.iterations < 0) {
    throw ConfigError("iteration count must be non-negative, got " +
                      std::to_string(config.iterations));
  }
  int prev = -1;
  for (int cp : checkpoints) {
    if (cp < 0 || cp > config.iterations) {
      throw ConfigError("checkpoint " + std::to_string(cp) +
                        " is outside [0, iterations=" + std::to_string(config.iterations) +
                        "]");
    }
    if (cp <= prev) {
      throw ConfigError("checkpoints must be strictly ascending");
    }
    prev = cp;
  }
}

}  // namespace

Grid step_parallel(const Grid& grid, const Strategy& strategy, int workers) {
  RunResult result = run(grid, RunConfig{strategy, workers, 1});
  return std::move(result.grid);
}

RunResult run(const Grid& initial, const RunConfig& config,
              const std::vector<int>& checkpoints) {
  return run(Grid(initial), config, checkpoints);
}

RunResult run(Grid&& initial, const RunConfig& config, const std::vector<int>& checkpoints) {
  check_run_config(config, checkpoints);

  const Partition partition =
      make_partition(initial.width(), initial.height(), config.strategy, config.workers);
  const int region_count = static_cast<int>(partition.regions.size());
  // Extra workers beyond the region count would never receive a region, so
  // they are not spawned; results do not depend on team size.
  const int team_size = config.strategy.is_serial()
                            ? 1
                            : std::min(config.workers, region_count);

  Grid current = std::move(initial);
  Grid next(current.width(), current.height());

  RunStats stats;
  std::size_t checkpoint_index = 0;
  auto record_checkpoint = [&](int iteration) {
    while (checkpoint_index < checkpoints.size() &&
           checkpoints[checkpoint_index] == iteration) {
      stats.population_checkpoints.emplace_back(iteration, population(current));
      ++checkpoint_index;
    }
  };
  record_checkpoint(0);

  if (team_size == 1) {
    for (int gen = 1; gen <= config.iterations; ++gen) {
      for (const SubRegion& region : partition.regions) {
        compute_region(current, next, region);
      }
      std::swap(current, next);
      record_checkpoint(gen);
    }
  } else {
    WorkerTeam team(team_size);
    const Grid* src = &current;
    Grid* dst = &next;
    const std::function<void(int)> generation = [&](int worker) {
      for (int r = worker; r < region_count; r += team_size) {
        compute_region(*src, *dst, partition.regions[r]);
      }
    };
    for (int gen = 1; gen <= config.iterations; ++gen) {
      team.run(generation);
      std::swap(current, next);
      record_checkpoint(gen);
    }
  }

  stats.generations_computed = config.iterations;
  return RunResult{std::move(current), std::move(stats)};
}

}  // namespace life
