#include "mgauss/kron.hpp"

#include <cstdint>

namespace mgauss {

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) {
    throw DimensionError("kron needs non-empty operands");
  }
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t p = b.rows(), q = b.cols();
  const std::size_t out_rows = detail::checked_mul(m, p);
  const std::size_t out_cols = detail::checked_mul(n, q);
  Matrix out(out_rows, out_cols);
  const bool par =
      detail::checked_mul(out_rows, out_cols) >= detail::kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(out_rows); ++r) {
    const std::size_t i = static_cast<std::size_t>(r) / p;  // row of a
    const std::size_t s = static_cast<std::size_t>(r) % p;  // row of b
    for (std::size_t j = 0; j < n; ++j) {
      const double aij = a(i, j);
      for (std::size_t t = 0; t < q; ++t) {
        out(static_cast<std::size_t>(r), j * q + t) = aij * b(s, t);
      }
    }
  }
  return out;
}

Matrix vec(const Matrix& a) {
  if (a.empty()) throw DimensionError("vec needs a non-empty matrix");
  const std::size_t m = a.rows(), n = a.cols();
  Matrix out(m * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      out(j * m + i, 0) = a(i, j);
    }
  }
  return out;
}

Matrix unvec(const Matrix& v, std::size_t m, std::size_t n) {
  if (v.cols() != 1) {
    throw DimensionError("unvec needs a column vector");
  }
  if (v.rows() != detail::checked_mul(m, n)) {
    throw DimensionError("unvec length mismatch: vector has " +
                         std::to_string(v.rows()) + " entries, target shape " +
                         std::to_string(m) + "x" + std::to_string(n));
  }
  Matrix out(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      out(i, j) = v(j * m + i, 0);
    }
  }
  return out;
}

}  // namespace mgauss
