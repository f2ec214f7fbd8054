#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewjdt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violated the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug or a corrupted state.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or structured input. Line and column are 1-based;
/// column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace skewjdt
