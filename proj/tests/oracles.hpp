#pragma once

// Independent verification paths used only by tests. Nothing here goes
// through the library's Cholesky or Kronecker machinery: eigenvalues come
// from Jacobi rotations, inverses from Gauss-Jordan elimination.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mgauss/matrix.hpp"

namespace oracle {

using mgauss::Matrix;

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps = 64) {
  const std::size_t n = a.rows();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  return eig;
}

// Inverse by Gauss-Jordan elimination with partial pivoting.
inline Matrix gj_inverse(Matrix a) {
  const std::size_t n = a.rows();
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    }
    if (std::fabs(a(pivot, col)) < 1e-300) {
      throw std::runtime_error("gj_inverse: singular matrix");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const double d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Textbook conditioning of a partitioned Gaussian vector: x is the first
// dim_x coordinates, y the rest, observed at obs_y. Returns the conditional
// mean (dim_x x 1) and covariance (dim_x x dim_x):
//   mu_{x|y} = mu_x + S_xy S_yy^-1 (obs - mu_y)
//   S_{x|y}  = S_xx - S_xy S_yy^-1 S_xy^T.
inline std::pair<Matrix, Matrix> conditional_vector_oracle(
    const Matrix& mu, const Matrix& sigma, std::size_t dim_x,
    const Matrix& obs_y) {
  const std::size_t d = mu.rows();
  const std::size_t dim_y = d - dim_x;
  const Matrix s_xx = mgauss::block(sigma, 0, 0, dim_x, dim_x);
  const Matrix s_xy = mgauss::block(sigma, 0, dim_x, dim_x, dim_y);
  const Matrix s_yy = mgauss::block(sigma, dim_x, dim_x, dim_y, dim_y);
  const Matrix mu_x = mgauss::block(mu, 0, 0, dim_x, 1);
  const Matrix mu_y = mgauss::block(mu, dim_x, 0, dim_y, 1);
  const Matrix s_yy_inv = gj_inverse(s_yy);
  const Matrix mean = mu_x + s_xy * s_yy_inv * (obs_y - mu_y);
  const Matrix cov = s_xx - s_xy * s_yy_inv * s_xy.transpose();
  return {mean, cov};
}

}  // namespace oracle
