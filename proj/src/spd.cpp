#include "mgauss/spd.hpp"

#include <cmath>
#include <cstdint>
#include <string>

namespace mgauss {

Matrix symmetrize(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("symmetrize needs a square matrix");
  }
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = 0.5 * (a(i, j) + a(j, i));
    }
  }
  return out;
}

SpdMatrix::SpdMatrix(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) {
    throw DimensionError("SPD matrix must be square, got " +
                         std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
  mat_ = symmetrize(a);
  const std::size_t n = mat_.rows();

  double max_diag = mat_(0, 0);
  for (std::size_t i = 1; i < n; ++i) max_diag = std::max(max_diag, mat_(i, i));
  if (max_diag <= 0.0) {
    throw NotPositiveDefiniteError(
        "not positive definite: no positive diagonal entry");
  }
  const double pivot_floor = tol * max_diag;

  chol_ = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = mat_(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= chol_(j, k) * chol_(j, k);
    if (!(d > pivot_floor) || d <= 0.0) {
      throw NotPositiveDefiniteError(
          "not positive definite: pivot " + std::to_string(j) + " is " +
          std::to_string(d) + " (floor " + std::to_string(pivot_floor) + ")");
    }
    const double ljj = std::sqrt(d);
    chol_(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = mat_(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= chol_(i, k) * chol_(j, k);
      chol_(i, j) = s / ljj;
    }
  }
}

Matrix solve_lower(const Matrix& l, const Matrix& b) {
  if (l.rows() != l.cols() || b.rows() != l.rows()) {
    throw DimensionError("solve_lower dimension mismatch");
  }
  const std::size_t n = l.rows(), k = b.cols();
  Matrix y(n, k);
  const bool par = n * n * k >= detail::kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(k); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = b(i, static_cast<std::size_t>(c));
      for (std::size_t t = 0; t < i; ++t) {
        s -= l(i, t) * y(t, static_cast<std::size_t>(c));
      }
      y(i, static_cast<std::size_t>(c)) = s / l(i, i);
    }
  }
  return y;
}

Matrix solve_lower_transpose(const Matrix& l, const Matrix& b) {
  if (l.rows() != l.cols() || b.rows() != l.rows()) {
    throw DimensionError("solve_lower_transpose dimension mismatch");
  }
  const std::size_t n = l.rows(), k = b.cols();
  Matrix x(n, k);
  const bool par = n * n * k >= detail::kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(k); ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = b(ii, static_cast<std::size_t>(c));
      for (std::size_t t = ii + 1; t < n; ++t) {
        s -= l(t, ii) * x(t, static_cast<std::size_t>(c));
      }
      x(ii, static_cast<std::size_t>(c)) = s / l(ii, ii);
    }
  }
  return x;
}

Matrix SpdMatrix::solve(const Matrix& b) const {
  if (b.rows() != dim()) {
    throw DimensionError("solve: right-hand side has " +
                         std::to_string(b.rows()) + " rows, matrix dim is " +
                         std::to_string(dim()));
  }
  return solve_lower_transpose(chol_, solve_lower(chol_, b));
}

double SpdMatrix::logdet() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) s += std::log(chol_(i, i));
  return 2.0 * s;
}

}  // namespace mgauss
