#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laytrop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MagnitudeOverflow : public Error {
 public:
  using Error::Error;
};

class BalancedOrZeroHasNoSign : public Error {
 public:
  BalancedOrZeroHasNoSign() : Error("sign is defined only for signed scalars") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class UnreducedSystem : public Error {
 public:
  using Error::Error;
};

class NotACover : public Error {
 public:
  NotACover() : Error("index set does not cover the universe") {}
};

class RightHandSideNotSigned : public Error {
 public:
  RightHandSideNotSigned() : Error("right-hand side has a balanced or zero entry") {}
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace laytrop
