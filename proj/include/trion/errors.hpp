#pragma once

#include <stdexcept>
#include <string>

namespace trion {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A three-body system definition that violates its own constraints
// (non-positive finite mass, inconsistent symmetry flag, ...).
struct InvalidSystemError : Error {
    using Error::Error;
};

// Unknown preset / table / enum name. The message lists valid choices.
struct LookupError : Error {
    using Error::Error;
};

// A size constraint was violated (basis count not a power of two,
// parameter vector of the wrong length, matrix dimension mismatch).
struct SizeError : Error {
    using Error::Error;
};

// A correlated integral does not converge for the given exponents
// (some pair-sum real part is non-positive).
struct DivergentIntegralError : Error {
    using Error::Error;
};

// Requested integral order outside the supported range.
struct UnsupportedOrderError : Error {
    using Error::Error;
};

// The overlap matrix has eigenvalues at or below the relative floor.
struct NearSingularOverlapError : Error {
    int n_bad = 0;
    NearSingularOverlapError(const std::string& msg, int bad) : Error(msg), n_bad(bad) {}
};

// An API contract was violated by the caller (e.g. rotating a real state
// with an even-Y Pauli string).
struct ContractViolationError : Error {
    using Error::Error;
};

// Generic numerical failure (eigensolver breakdown, non-finite objective).
struct NumericalError : Error {
    using Error::Error;
};

// File / stream problems.
struct IoError : Error {
    using Error::Error;
};

} // namespace trion
