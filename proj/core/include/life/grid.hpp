#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "life/errors.hpp"

namespace life {

enum class CellState : std::uint8_t { Dead = 0, Alive = 1 };

struct Coord {
  int x = 0;
  int y = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

// Finite toroidal Life universe: opposite edges are adjacent on both axes.
// Cells are stored row-major, one byte per cell (0 dead, 1 alive). Dimensions
// must be at least 3x3 so the eight wrapped neighbor offsets land on distinct
// cells.
class Grid {
 public:
  static constexpr int kMinDimension = 3;

  // All cells start dead.
  Grid(int width, int height)
      : width_(width), height_(height) {
    if (width < kMinDimension || height < kMinDimension) {
      throw DimensionTooSmall(width, height);
    }
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  CellState at(int x, int y) const { return static_cast<CellState>(cells_[index(x, y)]); }
  CellState at(Coord c) const { return at(c.x, c.y); }
  bool alive(int x, int y) const { return cells_[index(x, y)] != 0; }

  void set(int x, int y, CellState s) { cells_[index(x, y)] = static_cast<std::uint8_t>(s); }
  void set(Coord c, CellState s) { set(c.x, c.y, s); }

  // Reduces arbitrary (possibly negative) coordinates onto the torus.
  Coord wrap(int x, int y) const noexcept {
    x %= width_;
    if (x < 0) x += width_;
    y %= height_;
    if (y < 0) y += height_;
    return {x, y};
  }

  const std::uint8_t* data() const noexcept { return cells_.data(); }
  std::uint8_t* data() noexcept { return cells_.data(); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

// Number of live cells among the eight wrapped neighbors of `at`.
int neighbor_count(const Grid& grid, Coord at);

// The B3/S23 transition: a live cell survives with 2 or 3 live neighbors,
// a dead cell is born with exactly 3, everything else is dead.
CellState next_state(CellState current, int live_neighbors);

// One synchronous generation, computed single-threaded into a fresh buffer.
// Deliberately the plainest possible implementation: it is the correctness
// oracle the parallel engine is checked against.
Grid step_serial(const Grid& grid);

// Count of live cells.
int population(const Grid& grid);

}  // namespace life
