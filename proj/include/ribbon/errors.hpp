#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbon {

/// Malformed ribbon-graph text. `line()` is 1-based; problems found only at
/// end of input report the last line, and 0 means no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on input outside its domain (non-planar graph
/// where planarity is required, edge index out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (coefficient sum mismatch, non-zero
/// division remainder, ...).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ribbon
