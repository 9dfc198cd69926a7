#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matforms {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different alphabets (GL vs. O) were combined.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands carry different coefficient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated (arity, degree, parameter range).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the expression language, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace matforms
