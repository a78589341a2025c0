#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vc2d {

// Expression text failed to parse; offset is the byte position in the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariableError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Evaluation hit a value outside a function's domain: ln or sqrt of a
// negative number, division by zero. The message names the offending
// operation and its position in the source expression when known.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The value is defined but its derivative is not (sqrt at 0).
class NonDifferentiableError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An operator asked for more derivative levels than the field carries.
// Expression-backed fields carry two levels; every differential operator
// consumes one, so second-order operators cannot be chained.
class DerivativeOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A reconstruction precondition (divergence-free / vorticity-free on the
// declared domain) does not hold at the requested tolerance.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Straight-segment and axis-leg path integrals disagree, so the
// reconstructed potential is not well defined.
class PathDependenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polygon region is degenerate, clockwise or self-intersecting.
class PolygonError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vc2d
