#include "life/render.hpp"

namespace life {

std::string render_ascii(const Grid& grid) {
  std::string out;
  out.reserve(static_cast<std::size_t>(grid.height()) * (grid.width() + 1));
  for (int y = 0; y < grid.height(); ++y) {
    if (y > 0) out.push_back('\n');
    for (int x = 0; x < grid.width(); ++x) {
      out.push_back(grid.alive(x, y) ? '#' : '.');
    }
  }
  return out;
}

std::string render_pbm(const Grid& grid) {
  // 35 "0"/"1" tokens joined by spaces is 69 characters, the most that fits
  // the PBM 70-column limit.
  constexpr int kBitsPerLine = 35;

  std::string out = "P1\n" + std::to_string(grid.width()) + " " +
                    std::to_string(grid.height()) + "\n";
  for (int y = 0; y < grid.height(); ++y) {
    int line_bits = 0;
    for (int x = 0; x < grid.width(); ++x) {
      if (line_bits == kBitsPerLine) {
        out.push_back('\n');
        line_bits = 0;
      }
      if (line_bits > 0) out.push_back(' ');
      out.push_back(grid.alive(x, y) ? '1' : '0');
      ++line_bits;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace life
