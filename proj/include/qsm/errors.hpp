#pragma once

#include <stdexcept>

namespace qsm {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (q < 1, alpha <= 0, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

/// Objects built on different grids were combined.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Attempt to normalize a numerically zero vector.
struct NormalizationError : Error {
    using Error::Error;
};

/// A numeric consistency check failed (integrator norm drift, residual
/// imaginary part of an expectation value, ...).
struct NumericError : Error {
    using Error::Error;
};

} // namespace qsm
