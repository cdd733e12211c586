#pragma once

#include <cstddef>
#include <vector>

#include "mgauss/distribution.hpp"
#include "mgauss/matrix.hpp"
#include "mgauss/spd.hpp"

namespace mgauss {

// The Kronecker-structured special case: X (n x p) with
// vec(X) ~ N(vec(M), V (x) U) for U (n x n) and V (p x p) SPD. It spends
// only n^2 + p^2 numbers on a covariance that generally has (np)^2 degrees
// of freedom, so most full matrix Gaussians fall outside the family; the
// diagnostics below quantify that.
class MatrixNormal {
 public:
  MatrixNormal(Matrix mean, SpdMatrix u, SpdMatrix v);

  std::size_t rows() const { return mean_.rows(); }
  std::size_t cols() const { return mean_.cols(); }

  const Matrix& mean() const { return mean_; }
  const SpdMatrix& u() const { return u_; }
  const SpdMatrix& v() const { return v_; }

  // Embedding into the full representation: N(mean, V (x) U).
  MatrixGaussian to_full() const;

 private:
  Matrix mean_;
  SpdMatrix u_;
  SpdMatrix v_;
};

struct ParamCount {
  std::size_t structured;  // n^2 + p^2
  std::size_t full;        // (np)^2
  double ratio;            // structured / full
};

// Covariance parameter counts of the structured family vs the full family
// for an n x p variable.
ParamCount param_count_ratio(std::size_t n, std::size_t p);

struct DiagRepresentability {
  bool representable = false;
  // Positive factors with variances(i, j) = u[i] * v[j], normalized so
  // u[0] = 1; empty when not representable.
  std::vector<double> u;
  std::vector<double> v;
};

// Can an entrywise-independent law with the given n x p grid of variances
// (variances(i, j) = Var(X_ij), all > 0) be written with a Kronecker
// covariance? True exactly when the grid factors as u_i * v_j with positive
// u, v, checked entrywise within rel_tol. For n = p = 2 this is the ratio
// condition var(0,0)/var(0,1) = var(1,0)/var(1,1).
DiagRepresentability check_diag_representable(const Matrix& variances,
                                              double rel_tol);

struct NearestKroneckerResult {
  Matrix u;  // n x n, symmetrized, scaled so trace(u) = n
  Matrix v;  // p x p
  // Frobenius error ||Sigma - V (x) U||_F, absolute and relative to
  // ||Sigma||_F.
  double residual = 0.0;
  double relative_residual = 0.0;
  // The nearest pair can be indefinite; that is reported, not raised.
  bool factors_positive_definite = false;
};

// Best Frobenius-norm Kronecker approximation V (x) U of an (np) x (np)
// covariance, computed by rearranging Sigma into an n^2 x p^2 array whose
// best rank-one approximation (power iteration, iters steps, first basis
// vector as the fixed start) yields vec(U) vec(V)^T. Signs are fixed so
// trace(U) > 0.
NearestKroneckerResult nearest_kron_covariance(const SpdMatrix& sigma,
                                               std::size_t n, std::size_t p,
                                               std::size_t iters);

}  // namespace mgauss
