#ifndef HYPERSURF_ERROR_HPP
#define HYPERSURF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersurf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Operands or points whose dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input does not hold
/// (constant polynomial, degenerate gradient, degree too high, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed: a certificate or sampled invariant that
/// should hold by construction did not.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersurf

#endif  // HYPERSURF_ERROR_HPP
