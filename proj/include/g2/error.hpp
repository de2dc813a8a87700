#pragma once

#include <stdexcept>
#include <string>

namespace g2 {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient rings (e.g. GF(5) against GF(7)).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation is undefined for its arguments: inverse of zero, singular
/// matrix, index out of range, a determinant that is not one, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested computation is refused because it would not fit a desk-scale
/// budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace g2
