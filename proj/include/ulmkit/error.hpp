#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulmkit {

// Base of every error the library throws. `kind()` is a stable identifier
// used in machine-readable CLI error reports.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

// Invalid arguments or values violating a documented invariant.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// An operation's precondition does not hold (e.g. non-Frattini problem
// handed to a Frattini-only routine).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

// A brute-force search or table construction would exceed its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget"; }
};

// A self-verification failed. Never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "internal"; }
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
  const char* kind() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ulmkit
