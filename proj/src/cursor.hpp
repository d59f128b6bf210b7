#pragma once

#include "splitconf/graph.hpp"

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace splitconf::detail {

// Left-to-right reader for the small textual formats; errors carry 1-based columns.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[nodiscard]] bool done() const { return pos_ >= text_.size(); }
  [[nodiscard]] std::size_t column() const { return pos_ + 1; }
  [[nodiscard]] char peek() const { return done() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect(std::string_view word) {
    for (char c : word) expect(c);
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t value{};
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    (void)start;
    return value;
  }

  std::int64_t non_negative() {
    const std::size_t start = pos_;
    const auto value = integer();
    if (value < 0) throw ParseError("expected a non-negative integer", start + 1);
    return value;
  }

  void finish() {
    if (!done()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(column()), column());
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace splitconf::detail
