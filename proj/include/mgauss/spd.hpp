#pragma once

#include "mgauss/matrix.hpp"

namespace mgauss {

// Symmetric positive-definite matrix with its lower Cholesky factor cached
// at construction. Symmetrization (a + a^T)/2 is always applied first;
// factorization rejects the matrix when any pivot falls at or below
// tol * (largest diagonal entry). Singular or merely semidefinite inputs
// are errors, never approximated.
class SpdMatrix {
 public:
  static constexpr double kDefaultPdTol = 1e-12;

  explicit SpdMatrix(const Matrix& a, double tol = kDefaultPdTol);

  std::size_t dim() const { return mat_.rows(); }

  // Symmetrized entries.
  const Matrix& matrix() const { return mat_; }

  // Lower-triangular L with L L^T = matrix().
  const Matrix& chol_lower() const { return chol_; }

  // X solving (*this) X = b; b may have any number of columns.
  Matrix solve(const Matrix& b) const;

  double logdet() const;

 private:
  Matrix mat_;
  Matrix chol_;
};

// Forward substitution: y with L y = b for lower-triangular L.
Matrix solve_lower(const Matrix& l, const Matrix& b);

// Back substitution: x with L^T x = b for lower-triangular L.
Matrix solve_lower_transpose(const Matrix& l, const Matrix& b);

// (a + a^T)/2.
Matrix symmetrize(const Matrix& a);

}  // namespace mgauss
