#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prodlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid Precision context (target_bits < 53 or guard_bits < 16).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (non-finite input, q < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument too close to a pole of tan/cot/csc.
class PoleError : public Error {
 public:
  using Error::Error;
};

// stable_eval could not reach agreement after the maximum escalation.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Term index outside the [m, n) range of a product spec.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Log-space accumulator exceeded the exponent capacity of the format.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Convergence rows unusable for an order fit (zero or sub-noise errors).
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

// Requested angle seed is not in the constructible table.
class UnsupportedSeedError : public Error {
 public:
  using Error::Error;
};

// Expression violates a structural invariant (sqrt of a provably or
// uncertifiably negative value, division by an interval containing zero).
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Interval operation rejected (division by zero-straddling interval,
// square root of a negative-reaching interval).
class IntervalError : public Error {
 public:
  using Error::Error;
};

// Text input does not match the expression grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace prodlab
