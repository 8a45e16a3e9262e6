#pragma once

#include <stdexcept>
#include <string>

namespace tvs {

/// Malformed or inconsistent input data (bad dimensions, invalid graphs,
/// unreadable files). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A sampling-theory precondition does not hold, e.g. a plan whose
/// restricted basis is rank deficient. The CLI maps this to exit code 3.
class TheoryViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical routine failed (no convergence, ill-conditioned system).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace tvs
