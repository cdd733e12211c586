#pragma once

#include <stdexcept>
#include <string>

namespace mgauss {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible or overflowing shapes.
struct DimensionError : Error {
  using Error::Error;
};

// A matrix that must be symmetric positive-definite failed validation.
struct NotPositiveDefiniteError : Error {
  using Error::Error;
};

// A Kronecker-form covariance violated swap symmetry.
struct AsymmetryError : Error {
  using Error::Error;
};

// Invalid numeric input (non-finite entries, non-positive variances, ...).
struct ValueError : Error {
  using Error::Error;
};

}  // namespace mgauss
