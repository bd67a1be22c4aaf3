#pragma once

#include <stdexcept>
#include <string>

namespace life {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad dimensions, part counts, placements, flag values.
// The CLI maps these to exit code 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public ConfigError {
 public:
  DimensionTooSmall(int width, int height)
      : ConfigError("grid dimensions must be at least 3x3, got " + std::to_string(width) +
                    "x" + std::to_string(height)) {}
};

class TooManyParts : public ConfigError {
 public:
  TooManyParts(const std::string& axis, int parts, int extent)
      : ConfigError("cannot split " + std::to_string(extent) + " " + axis + " into " +
                    std::to_string(parts) + " non-empty parts") {}
};

class OutOfBounds : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonPositiveTime : public ConfigError {
 public:
  NonPositiveTime() : ConfigError("execution times must be positive to form a speedup") {}
};

// Malformed pattern input (RLE or plaintext). The CLI maps these to exit code 3.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace life
