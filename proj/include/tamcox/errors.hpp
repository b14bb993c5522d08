#pragma once

#include <stdexcept>
#include <string>

namespace tamcox {

// Base class for every error this library throws on contract violation.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact division left a remainder where integrality was promised.
struct NonIntegerResult : Error {
  using Error::Error;
};

// Two graded values with different truncation degrees were combined.
struct TruncationMismatch : Error {
  using Error::Error;
};

// Plethysm substitution into a series with a nonzero constant term.
struct ConstantTermError : Error {
  using Error::Error;
};

// Series operation whose contract pins the constant term (div, sqrt, log).
struct BadConstantTerm : Error {
  using Error::Error;
};

// Schur expansion requested beyond the configured character-table bound.
struct DegreeTooLarge : Error {
  using Error::Error;
};

// Enumeration or lattice construction beyond the configured size cap.
struct SizeLimit : Error {
  using Error::Error;
};

struct NotADivisor : Error {
  using Error::Error;
};

// M^k != I for the claimed order bound k.
struct NotFiniteOrder : Error {
  using Error::Error;
};

// The trace system solved to non-integer or negative eigenvalue multiplicities.
struct NonIntegerMultiplicity : Error {
  using Error::Error;
};

// A factored form whose expansion is not a polynomial.
struct NotAPolynomial : Error {
  using Error::Error;
};

// tau^n != I after construction; signals an orientation or arithmetic bug.
struct OrderCheckFailed : Error {
  using Error::Error;
};

}  // namespace tamcox
