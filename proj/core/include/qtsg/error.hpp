#pragma once

#include <stdexcept>
#include <string>

namespace qtsg {

// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation was handed an input outside its documented domain, e.g.
// decompose() on a table that is not associative and quasitrivial.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

// A documented size bound was exceeded. The message names the bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Two independent routes that must agree did not. Only a bug can cause this.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qtsg
