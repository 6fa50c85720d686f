#pragma once

#include <stdexcept>
#include <string>

namespace tropjac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad indices, zero weights, coincident vertices, parse
/// failures, schema violations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (a loop through a curve
/// vertex, a non-generic perturbation direction, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Seeing one of these means an invalid
/// object got past validation.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The curve does not satisfy the hypotheses under which the Jacobian
/// coordinates are known to classify divisors (reduced, bouquet bunch).
class UnsupportedHypotheses : public Error {
 public:
  using Error::Error;
};

}  // namespace tropjac
