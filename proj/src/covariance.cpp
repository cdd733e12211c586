#include "mgauss/covariance.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace mgauss {

namespace {

void check_swap_symmetry(const Matrix& s, std::size_t m, std::size_t n,
                         double swap_tol) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          const double lhs = s(i * m + k, j * n + l);
          const double rhs = s(k * m + i, l * n + j);
          if (std::fabs(lhs - rhs) > swap_tol) {
            throw AsymmetryError(
                "kron covariance violates swap symmetry at block (" +
                std::to_string(i) + "," + std::to_string(j) + ") entry (" +
                std::to_string(k) + "," + std::to_string(l) + ")");
          }
        }
      }
    }
  }
}

}  // namespace

KroneckerCovariance::KroneckerCovariance(std::size_t m, std::size_t n,
                                         Matrix s, double swap_tol)
    : m_(m), n_(n), s_(std::move(s)) {
  if (m == 0 || n == 0) {
    throw DimensionError("kron covariance needs positive variable shape");
  }
  if (s_.rows() != m * m || s_.cols() != n * n) {
    throw DimensionError("kron covariance for an " + std::to_string(m) + "x" +
                         std::to_string(n) + " variable must be " +
                         std::to_string(m * m) + "x" + std::to_string(n * n) +
                         ", got " + std::to_string(s_.rows()) + "x" +
                         std::to_string(s_.cols()));
  }
  check_swap_symmetry(s_, m_, n_, swap_tol);
}

KroneckerCovariance sigma_to_s(const SpdMatrix& sigma, std::size_t m,
                               std::size_t n) {
  if (sigma.dim() != detail::checked_mul(n, m)) {
    throw DimensionError("sigma_to_s: covariance dim " +
                         std::to_string(sigma.dim()) +
                         " does not equal n*m = " + std::to_string(n * m));
  }
  const Matrix& sig = sigma.matrix();
  Matrix s(m * m, n * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          s(i * m + k, j * n + l) = sig(j * m + i, l * m + k);
        }
      }
    }
  }
  return KroneckerCovariance(m, n, std::move(s));
}

SpdMatrix s_to_sigma(const KroneckerCovariance& s, double pd_tol) {
  const std::size_t m = s.m(), n = s.n();
  const std::size_t d = n * m;
  const Matrix& src = s.s();
  Matrix sigma(d, d);
  // Row a = j*m + i of Sigma addresses variable entry (i, j); same for
  // column b. Invert both and read the matching S entry.
  for (std::size_t a = 0; a < d; ++a) {
    const std::size_t i = a % m, j = a / m;
    for (std::size_t b = 0; b < d; ++b) {
      const std::size_t k = b % m, l = b / m;
      sigma(a, b) = src(i * m + k, j * n + l);
    }
  }
  return SpdMatrix(sigma, pd_tol);
}

CrossCovariance::CrossCovariance(std::size_t m, std::size_t n, std::size_t p,
                                 Matrix s_ba)
    : m_(m), n_(n), p_(p), s_ba_(std::move(s_ba)) {
  if (m == 0 || n == 0 || p == 0) {
    throw DimensionError("cross covariance needs positive shapes");
  }
  if (s_ba_.rows() != m * m || s_ba_.cols() != p * n) {
    throw DimensionError("cross covariance must be " + std::to_string(m * m) +
                         "x" + std::to_string(p * n) + ", got " +
                         std::to_string(s_ba_.rows()) + "x" +
                         std::to_string(s_ba_.cols()));
  }
}

CrossCovariance CrossCovariance::self(const KroneckerCovariance& s) {
  return CrossCovariance(s.m(), s.n(), s.n(), s.s());
}

CrossCovariance cross_cov_from_joint(const JointMatrixGaussian& joint) {
  const std::size_t m = joint.rows();
  const std::size_t n = joint.cols_a();
  const std::size_t p = joint.cols_b();
  const Matrix& sab = joint.sigma_ab();  // Cov(vec A, vec B)
  Matrix s_ba(m * m, p * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          // Cov(B_ij, A_kl) sits at vec-row (l*m + k), vec-col (j*m + i).
          s_ba(i * m + k, j * n + l) = sab(l * m + k, j * m + i);
        }
      }
    }
  }
  return CrossCovariance(m, n, p, std::move(s_ba));
}

}  // namespace mgauss
