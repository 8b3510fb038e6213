#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hosoya {

/// Thrown when an input exceeds a hard resource cap (brute-force matching
/// enumeration, general isomorphism search, unmaterializable expansions).
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text could not be parsed. position() is the zero-based character offset
/// into the input for literal grammars, and the one-based line number for
/// the line-oriented edge-list format.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " +
                           std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hosoya
