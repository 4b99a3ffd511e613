#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace propalg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation: index out of range, mismatched variable counts.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured size guard (max_vars, per-theorem caps).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed formula or DIMACS text. `position` is a 1-based column for
/// formulas and a 1-based line number for DIMACS input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace propalg
