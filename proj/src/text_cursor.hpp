#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hosoya/bigint.hpp"
#include "hosoya/errors.hpp"

namespace hosoya::detail {

// Shared scanner for the small literal grammars (continued fractions and
// caterpillar-bond specs).
struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) {
      throw ParseError(std::string("expected `") + c + "` " + what, pos);
    }
  }

  Int integer(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) {
      throw ParseError(std::string("expected ") + what, pos);
    }
    return Int(std::string(text.substr(start, pos - start)));
  }

  Int positive(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    Int value = integer(what);
    if (value < 1) {
      throw ParseError(std::string(what) + " must be positive", start);
    }
    return value;
  }

  void finish() {
    skip_ws();
    if (pos != text.size()) {
      throw ParseError("trailing characters", pos);
    }
  }
};

}  // namespace hosoya::detail
