#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcrit {

/// Raised for malformed arguments: unknown variables, ambient or
/// dimension mismatches, violated preconditions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in one of the text grammars; `position()` is a 0-based
/// offset into the source string.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dcrit
