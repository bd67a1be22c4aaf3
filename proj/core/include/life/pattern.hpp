#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "life/grid.hpp"

namespace life {

// Sparse description of an initial configuration. Live cells are kept sorted
// by (y, x) and unique; width/height come from the source format's header or
// row geometry, not from the tight bounding box of the live cells.
struct Pattern {
  int width = 0;
  int height = 0;
  std::vector<Coord> live_cells;

  // Sorts live_cells into scan order and drops duplicates.
  void normalize();

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Run-length-encoded pattern format: header "x = W, y = H" (optionally
// ", rule = B3/S23"), then runs of 'b' (dead) and 'o' (alive), '$' row ends
// (a count skips blank rows), '!' terminator, '#' comment lines. Trailing
// dead cells and rows are implied. Throws ParseError with line/column on
// malformed input or cells outside the declared bounds.
Pattern parse_rle(const std::string& text);

// Canonical RLE: maximal runs, no count on single cells, trailing dead cells
// omitted, blank rows folded into counted '$', body on one line, terminated
// by '!'. parse_rle(serialize_rle(p)) reproduces p exactly.
std::string serialize_rle(const Pattern& pattern);

// Plaintext format: '.' dead, 'O' alive, '!' comment lines. Ragged rows are
// padded with dead cells; dimensions are max row length x row count.
Pattern parse_plaintext(const std::string& text);

// Picks parse_rle or parse_plaintext from the file extension
// (.rle / .cells); anything else is a ConfigError. Read failures are
// ConfigError, malformed content is ParseError.
Pattern load_pattern_file(const std::string& path);

// Copies the grid and overwrites the pattern's full footprint starting at
// `origin` (dead pattern cells clear grid cells). The footprint must fit
// without wrapping; otherwise OutOfBounds.
Grid place_pattern(const Grid& grid, const Pattern& pattern, Coord origin);

// Seeded random soup: each cell is made alive with probability `density`,
// visiting cells in row-major order and drawing one SplitMix64 value per
// cell. Identical (dims, density, seed) give bit-identical grids on every
// platform.
Grid random_fill(int width, int height, double density, std::uint64_t seed);

}  // namespace life
