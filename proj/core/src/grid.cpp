#include "life/grid.hpp"

#include <cassert>

namespace life {

int neighbor_count(const Grid& grid, Coord at) {
  assert(at.x >= 0 && at.x < grid.width());
  assert(at.y >= 0 && at.y < grid.height());

  int count = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) continue;
      const Coord n = grid.wrap(at.x + dx, at.y + dy);
      if (grid.alive(n.x, n.y)) ++count;
    }
  }
  return count;
}

CellState next_state(CellState current, int live_neighbors) {
  assert(live_neighbors >= 0 && live_neighbors <= 8);
  if (current == CellState::Alive) {
    return (live_neighbors == 2 || live_neighbors == 3) ? CellState::Alive : CellState::Dead;
  }
  return live_neighbors == 3 ? CellState::Alive : CellState::Dead;
}

Grid step_serial(const Grid& grid) {
  Grid next(grid.width(), grid.height());
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      next.set(x, y, next_state(grid.at(x, y), neighbor_count(grid, {x, y})));
    }
  }
  return next;
}

int population(const Grid& grid) {
  const std::uint8_t* cells = grid.data();
  const std::size_t n = static_cast<std::size_t>(grid.width()) * grid.height();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) count += cells[i];
  return count;
}

}  // namespace life
