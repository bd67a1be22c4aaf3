#pragma once

#include <optional>
#include <string>
#include <vector>

#include "life/errors.hpp"

namespace life {

// Half-open rectangle of cells assigned to one worker.
struct SubRegion {
  int x0 = 0;  // inclusive
  int y0 = 0;  // inclusive
  int x1 = 0;  // exclusive
  int y1 = 0;  // exclusive

  int width() const noexcept { return x1 - x0; }
  int height() const noexcept { return y1 - y0; }
  int area() const noexcept { return width() * height(); }
  bool contains(int x, int y) const noexcept {
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  }

  friend bool operator==(const SubRegion&, const SubRegion&) = default;
};

// How the grid is split among workers. Blocks carries the block-grid shape
// (m columns x n rows of blocks); Serial ignores the worker count entirely.
struct Strategy {
  enum class Kind { Serial, Rows, Cols, Blocks };

  Kind kind = Kind::Serial;
  int blocks_x = 1;  // m: block-grid columns (Blocks only)
  int blocks_y = 1;  // n: block-grid rows (Blocks only)

  static Strategy serial() { return {Kind::Serial, 1, 1}; }
  static Strategy rows() { return {Kind::Rows, 1, 1}; }
  static Strategy cols() { return {Kind::Cols, 1, 1}; }
  static Strategy blocks(int m, int n) { return {Kind::Blocks, m, n}; }

  bool is_serial() const noexcept { return kind == Kind::Serial; }

  // Number of sub-regions this strategy produces for a given worker count:
  // one for Serial, `workers` for Rows/Cols, m*n for Blocks.
  int part_count(int workers) const noexcept;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// CLI/CSV token: "serial", "rows", "cols", "blocks:MxN".
std::string to_string(const Strategy& strategy);
Strategy parse_strategy(const std::string& token);  // throws ConfigError

// An ordered, disjoint, exactly-covering split of a grid.
struct Partition {
  int grid_width = 0;
  int grid_height = 0;
  std::vector<SubRegion> regions;
};

// `parts` contiguous full-width bands, top to bottom. Band heights differ by
// at most one; the first (height mod parts) bands get the extra row.
Partition partition_rows(int width, int height, int parts);

// Mirror of partition_rows along the x axis: full-height column bands.
Partition partition_cols(int width, int height, int parts);

// m x n rectangular blocks: the column cuts of partition_cols crossed with
// the row cuts of partition_rows, listed in row-major order.
Partition partition_blocks(int width, int height, int m, int n);

// Dispatch on strategy kind. Rows/Cols split into `workers` parts.
Partition make_partition(int width, int height, const Strategy& strategy, int workers);

// Checks disjointness and exact cover by marking every covered cell once.
// Returns std::nullopt when the partition is valid, otherwise a description
// of the first double-covered, out-of-bounds, or uncovered cell.
std::optional<std::string> validate_partition(const Partition& partition);

}  // namespace life
