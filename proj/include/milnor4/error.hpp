#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor4 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a 0-based byte offset into the
/// parsed text; the message already carries a human-readable location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a precondition (mismatched strand
/// counts, out-of-range indices, dangling arc references, ...).
class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace milnor4
