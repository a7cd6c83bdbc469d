#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varpat {

// Raised when an input does not satisfy an operation's contract
// (wrong pattern class, parameter caps, missing images, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `position` is 1-indexed (characters for patterns and
// words, lines for graph files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, const char* unit = "position")
      : Error(what + " at " + unit + " " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace varpat
