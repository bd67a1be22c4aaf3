#pragma once

#include <string>

#include "life/grid.hpp"

namespace life {

// One line per row, top to bottom: '#' alive, '.' dead. No trailing newline.
std::string render_ascii(const Grid& grid);

// Plain PBM (magic "P1"): 1 = alive (black), 0 = dead (white), rows top to
// bottom. Lines never exceed 70 characters, so wide rows are wrapped.
std::string render_pbm(const Grid& grid);

}  // namespace life
