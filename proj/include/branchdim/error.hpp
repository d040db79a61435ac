#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace branchdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: group-definition files, word expressions, vertices.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (tree level, word length, memo size) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace branchdim
