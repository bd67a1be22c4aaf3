#include "life/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "life/rng.hpp"

namespace life {

namespace {

constexpr long kMaxRunCount = 1000000000L;

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Character scanner with 1-based line/column tracking for error reporting.
struct Cursor {
  const std::string& text;
  std::size_t i = 0;
  int line = 1;
  int col = 1;

  bool eof() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  char take() {
    const char c = text[i++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_blank() {
    while (!eof() && is_blank(peek())) take();
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, col);
  }
};

// Skips comment lines ('#' for RLE) and blank lines, leaving the cursor at
// the start of the first substantive line.
void skip_comment_lines(Cursor& c, char comment_char) {
  for (;;) {
    c.skip_blank();
    if (c.eof() || c.peek() != comment_char) return;
    while (!c.eof() && c.take() != '\n') {
    }
  }
}

long parse_count(Cursor& c) {
  long value = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + (c.peek() - '0');
    if (value > kMaxRunCount) c.fail("run count too large");
    c.take();
  }
  return value;
}

void expect_char(Cursor& c, char expected, const std::string& what) {
  if (c.eof() || c.peek() != expected) c.fail("expected " + what);
  c.take();
}

void skip_spaces(Cursor& c) {
  while (!c.eof() && (c.peek() == ' ' || c.peek() == '\t')) c.take();
}

int parse_header_int(Cursor& c, const std::string& what) {
  skip_spaces(c);
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    c.fail("expected " + what);
  }
  const long v = parse_count(c);
  return static_cast<int>(v);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

// Header: "x = W, y = H" with an optional ", rule = B3/S23" suffix. Only the
// B3/S23 family (also written 23/3) is simulated here, so anything else is
// rejected.
void parse_rle_header(Cursor& c, int& width, int& height) {
  skip_spaces(c);
  expect_char(c, 'x', "'x' at start of RLE header");
  skip_spaces(c);
  expect_char(c, '=', "'=' after 'x'");
  width = parse_header_int(c, "width after 'x ='");
  skip_spaces(c);
  expect_char(c, ',', "',' after width");
  skip_spaces(c);
  expect_char(c, 'y', "'y' in RLE header");
  skip_spaces(c);
  expect_char(c, '=', "'=' after 'y'");
  height = parse_header_int(c, "height after 'y ='");
  skip_spaces(c);

  if (!c.eof() && c.peek() == ',') {
    c.take();
    skip_spaces(c);
    std::string key;
    while (!c.eof() && std::isalpha(static_cast<unsigned char>(c.peek()))) {
      key.push_back(c.take());
    }
    if (lower(key) != "rule") c.fail("unknown RLE header field '" + key + "'");
    skip_spaces(c);
    expect_char(c, '=', "'=' after 'rule'");
    skip_spaces(c);
    std::string rule;
    while (!c.eof() && !is_blank(c.peek()) && c.peek() != ',') {
      rule.push_back(c.take());
    }
    const std::string r = lower(rule);
    if (r != "b3/s23" && r != "23/3") {
      c.fail("unsupported rule '" + rule + "' (only B3/S23)");
    }
    skip_spaces(c);
  }
  if (!c.eof() && c.peek() != '\n') c.fail("trailing characters after RLE header");
  if (!c.eof()) c.take();
}

}  // namespace

void Pattern::normalize() {
  std::sort(live_cells.begin(), live_cells.end(), [](const Coord& a, const Coord& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  live_cells.erase(std::unique(live_cells.begin(), live_cells.end()), live_cells.end());
}

Pattern parse_rle(const std::string& text) {
  Cursor c{text};
  skip_comment_lines(c, '#');
  if (c.eof()) c.fail("missing RLE header");

  Pattern p;
  parse_rle_header(c, p.width, p.height);

  int x = 0;
  int y = 0;
  bool terminated = false;
  while (!terminated) {
    c.skip_blank();
    if (c.eof()) c.fail("missing '!' terminator");

    long count = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      count = parse_count(c);
      if (count == 0) c.fail("run count must be positive");
      c.skip_blank();
      if (c.eof()) c.fail("run count without a tag");
    }

    const int tag_line = c.line;
    const int tag_col = c.col;
    const char tag = c.take();
    switch (tag) {
      case 'b':
      case 'B':
      case 'o':
      case 'O': {
        if (y >= p.height) {
          throw ParseError("cell row " + std::to_string(y) + " exceeds declared height " +
                               std::to_string(p.height),
                           tag_line, tag_col);
        }
        if (x + count > p.width) {
          throw ParseError("run exceeds declared width " + std::to_string(p.width),
                           tag_line, tag_col);
        }
        if (tag == 'o' || tag == 'O') {
          for (long k = 0; k < count; ++k) {
            p.live_cells.push_back({x + static_cast<int>(k), y});
          }
        }
        x += static_cast<int>(count);
        break;
      }
      case '$':
        y += static_cast<int>(count);
        x = 0;
        break;
      case '!':
        if (count != 1) {
          throw ParseError("run count before '!'", tag_line, tag_col);
        }
        terminated = true;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + tag + "'", tag_line,
                         tag_col);
    }
  }
  // Anything after '!' is ignored by convention.
  return p;
}

std::string serialize_rle(const Pattern& pattern) {
  Pattern p = pattern;
  p.normalize();
  for (const Coord& cell : p.live_cells) {
    if (cell.x < 0 || cell.x >= p.width || cell.y < 0 || cell.y >= p.height) {
      throw ConfigError("pattern has live cells outside its declared bounds");
    }
  }

  std::string out = "x = " + std::to_string(p.width) + ", y = " + std::to_string(p.height) + "\n";
  auto emit_run = [&out](long n, char tag) {
    if (n > 1) out += std::to_string(n);
    out.push_back(tag);
  };

  int cur_y = 0;
  int cur_x = 0;
  std::size_t i = 0;
  while (i < p.live_cells.size()) {
    const int y = p.live_cells[i].y;
    if (y > cur_y) {
      emit_run(y - cur_y, '$');
      cur_y = y;
      cur_x = 0;
    }
    // Maximal run of horizontally consecutive live cells.
    const int run_start = p.live_cells[i].x;
    int run_end = run_start + 1;
    ++i;
    while (i < p.live_cells.size() && p.live_cells[i].y == y && p.live_cells[i].x == run_end) {
      ++run_end;
      ++i;
    }
    if (run_start > cur_x) emit_run(run_start - cur_x, 'b');
    emit_run(run_end - run_start, 'o');
    cur_x = run_end;
  }
  out.push_back('!');
  return out;
}

Pattern parse_plaintext(const std::string& text) {
  Pattern p;
  int y = 0;
  int line_no = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    const std::size_t stop = end == std::string::npos ? text.size() : end;

    if (start < stop && text[start] == '!') {
      // comment line
    } else {
      int x = 0;
      for (std::size_t i = start; i < stop; ++i) {
        const char ch = text[i];
        if (ch == '.') {
          ++x;
        } else if (ch == 'O') {
          p.live_cells.push_back({x, y});
          ++x;
        } else if (is_blank(ch)) {
          // tolerated, not a cell
        } else {
          throw ParseError(std::string("unexpected character '") + ch + "'", line_no,
                           static_cast<int>(i - start) + 1);
        }
      }
      p.width = std::max(p.width, x);
      ++y;
    }

    if (end == std::string::npos) break;
    start = end + 1;
    ++line_no;
  }
  p.height = y;
  return p;
}

Pattern load_pattern_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read pattern file '" + path + "'");
  }
  std::ostringstream contents;
  contents << in.rdbuf();

  const std::size_t dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : lower(path.substr(dot));
  if (ext == ".rle") return parse_rle(contents.str());
  if (ext == ".cells") return parse_plaintext(contents.str());
  throw ConfigError("unsupported pattern extension '" + ext + "' (expected .rle or .cells)");
}

Grid place_pattern(const Grid& grid, const Pattern& pattern, Coord origin) {
  if (origin.x < 0 || origin.y < 0 || origin.x + pattern.width > grid.width() ||
      origin.y + pattern.height > grid.height()) {
    throw OutOfBounds("pattern footprint " + std::to_string(pattern.width) + "x" +
                      std::to_string(pattern.height) + " at (" + std::to_string(origin.x) +
                      ", " + std::to_string(origin.y) + ") exceeds grid " +
                      std::to_string(grid.width()) + "x" + std::to_string(grid.height()));
  }

  Grid result = grid;
  for (int y = 0; y < pattern.height; ++y) {
    for (int x = 0; x < pattern.width; ++x) {
      result.set(origin.x + x, origin.y + y, CellState::Dead);
    }
  }
  for (const Coord& cell : pattern.live_cells) {
    result.set(origin.x + cell.x, origin.y + cell.y, CellState::Alive);
  }
  return result;
}

Grid random_fill(int width, int height, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ConfigError("density must be in [0, 1], got " + std::to_string(density));
  }
  Grid grid(width, height);
  SplitMix64 rng(seed);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (rng.next_unit() < density) grid.set(x, y, CellState::Alive);
    }
  }
  return grid;
}

}  // namespace life
