#include "life/decomposition.hpp"

#include <charconv>
#include <vector>

namespace life {

namespace {

// Cut points of an extent split into `parts` bands: band sizes differ by at
// most one and the first (extent mod parts) bands carry the extra unit.
std::vector<int> band_bounds(int extent, int parts) {
  std::vector<int> bounds;
  bounds.reserve(static_cast<std::size_t>(parts) + 1);
  const int base = extent / parts;
  const int extra = extent % parts;
  int at = 0;
  bounds.push_back(at);
  for (int i = 0; i < parts; ++i) {
    at += base + (i < extra ? 1 : 0);
    bounds.push_back(at);
  }
  return bounds;
}

void check_parts(const char* axis, int parts, int extent) {
  if (parts < 1 || parts > extent) {
    throw TooManyParts(axis, parts, extent);
  }
}

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw ConfigError("partition dimensions must be positive");
  }
}

}  // namespace

int Strategy::part_count(int workers) const noexcept {
  switch (kind) {
    case Kind::Serial:
      return 1;
    case Kind::Rows:
    case Kind::Cols:
      return workers;
    case Kind::Blocks:
      return blocks_x * blocks_y;
  }
  return 1;
}

std::string to_string(const Strategy& strategy) {
  switch (strategy.kind) {
    case Strategy::Kind::Serial:
      return "serial";
    case Strategy::Kind::Rows:
      return "rows";
    case Strategy::Kind::Cols:
      return "cols";
    case Strategy::Kind::Blocks:
      return "blocks:" + std::to_string(strategy.blocks_x) + "x" +
             std::to_string(strategy.blocks_y);
  }
  return "serial";
}

Strategy parse_strategy(const std::string& token) {
  if (token == "serial") return Strategy::serial();
  if (token == "rows") return Strategy::rows();
  if (token == "cols") return Strategy::cols();
  if (token.rfind("blocks:", 0) == 0) {
    const std::string shape = token.substr(7);
    const std::size_t x = shape.find('x');
    if (x != std::string::npos) {
      int m = 0;
      int n = 0;
      const char* ms = shape.data();
      const char* xs = shape.data() + x;
      const char* end = shape.data() + shape.size();
      auto mr = std::from_chars(ms, xs, m);
      auto nr = std::from_chars(xs + 1, end, n);
      if (mr.ec == std::errc{} && mr.ptr == xs && nr.ec == std::errc{} && nr.ptr == end &&
          m >= 1 && n >= 1) {
        return Strategy::blocks(m, n);
      }
    }
  }
  throw ConfigError("unknown strategy '" + token +
                    "' (expected serial, rows, cols, or blocks:MxN)");
}

Partition partition_rows(int width, int height, int parts) {
  check_dims(width, height);
  check_parts("rows", parts, height);

  Partition p{width, height, {}};
  p.regions.reserve(static_cast<std::size_t>(parts));
  const auto ys = band_bounds(height, parts);
  for (int i = 0; i < parts; ++i) {
    p.regions.push_back({0, ys[i], width, ys[i + 1]});
  }
  return p;
}

Partition partition_cols(int width, int height, int parts) {
  check_dims(width, height);
  check_parts("columns", parts, width);

  Partition p{width, height, {}};
  p.regions.reserve(static_cast<std::size_t>(parts));
  const auto xs = band_bounds(width, parts);
  for (int i = 0; i < parts; ++i) {
    p.regions.push_back({xs[i], 0, xs[i + 1], height});
  }
  return p;
}

Partition partition_blocks(int width, int height, int m, int n) {
  check_dims(width, height);
  check_parts("columns", m, width);
  check_parts("rows", n, height);

  Partition p{width, height, {}};
  p.regions.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  const auto xs = band_bounds(width, m);
  const auto ys = band_bounds(height, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      p.regions.push_back({xs[i], ys[j], xs[i + 1], ys[j + 1]});
    }
  }
  return p;
}

Partition make_partition(int width, int height, const Strategy& strategy, int workers) {
  if (workers < 1) {
    throw ConfigError("worker count must be at least 1, got " + std::to_string(workers));
  }
  switch (strategy.kind) {
    case Strategy::Kind::Serial:
      return Partition{width, height, {SubRegion{0, 0, width, height}}};
    case Strategy::Kind::Rows:
      return partition_rows(width, height, workers);
    case Strategy::Kind::Cols:
      return partition_cols(width, height, workers);
    case Strategy::Kind::Blocks:
      return partition_blocks(width, height, strategy.blocks_x, strategy.blocks_y);
  }
  throw ConfigError("unknown strategy kind");
}

std::optional<std::string> validate_partition(const Partition& partition) {
  const int w = partition.grid_width;
  const int h = partition.grid_height;
  if (w < 1 || h < 1) {
    return "grid dimensions are empty";
  }

  std::vector<std::uint8_t> covered(static_cast<std::size_t>(w) * h, 0);
  for (std::size_t r = 0; r < partition.regions.size(); ++r) {
    const SubRegion& region = partition.regions[r];
    if (region.x0 < 0 || region.y0 < 0 || region.x1 > w || region.y1 > h ||
        region.x0 >= region.x1 || region.y0 >= region.y1) {
      return "region " + std::to_string(r) + " is empty or out of bounds";
    }
    for (int y = region.y0; y < region.y1; ++y) {
      for (int x = region.x0; x < region.x1; ++x) {
        std::uint8_t& mark = covered[static_cast<std::size_t>(y) * w + x];
        if (mark != 0) {
          return "cell (" + std::to_string(x) + ", " + std::to_string(y) +
                 ") is covered twice (second time by region " + std::to_string(r) + ")";
        }
        mark = 1;
      }
    }
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (covered[static_cast<std::size_t>(y) * w + x] == 0) {
        return "cell (" + std::to_string(x) + ", " + std::to_string(y) + ") is not covered";
      }
    }
  }
  return std::nullopt;
}

}  // namespace life
