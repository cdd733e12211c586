#include "mgauss/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>

namespace mgauss {

namespace detail {

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw DimensionError("matrix dimensions overflow platform limits");
  }
  return a * b;
}

}  // namespace detail

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  detail::checked_mul(rows, cols);
}

void require_finite(const std::vector<double>& entries) {
  for (double x : entries) {
    if (!std::isfinite(x)) {
      throw ValueError("matrix entries must be finite");
    }
  }
}

std::string shape_str(const Matrix& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_shape(rows, cols);
  entries_.assign(rows * cols, 0.0);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_shape(rows, cols);
  if (entries_.size() != rows * cols) {
    throw DimensionError("entry count does not match declared shape");
  }
  require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  require_shape(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix out(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i])) throw ValueError("matrix entries must be finite");
    out(i, i) = d[i];
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (!same_shape(other)) {
    throw DimensionError("matrix sum needs equal shapes, got " +
                         shape_str(*this) + " and " + shape_str(other));
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] += other.entries_[k];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (!same_shape(other)) {
    throw DimensionError("matrix difference needs equal shapes, got " +
                         shape_str(*this) + " and " + shape_str(other));
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] -= other.entries_[k];
  }
  return out;
}

Matrix Matrix::operator*(double s) const {
  Matrix out = *this;
  for (double& x : out.entries_) x *= s;
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionError("matrix product needs inner dimensions to agree, got " +
                         shape_str(*this) + " times " + shape_str(other));
  }
  const std::size_t m = rows_, k = cols_, n = other.cols_;
  Matrix out(m, n);
  const double* a = entries_.data();
  const double* b = other.entries_.data();
  double* c = out.entries_.data();
  // Each output row is accumulated in ascending inner index, so the result
  // is bit-identical to the serial reference regardless of thread count.
  const bool par = detail::checked_mul(detail::checked_mul(m, n), k) >=
                   detail::kParallelWorkThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(m); ++i) {
    double* crow = c + static_cast<std::size_t>(i) * n;
    const double* arow = a + static_cast<std::size_t>(i) * k;
    for (std::size_t t = 0; t < k; ++t) {
      const double aik = arow[t];
      const double* brow = b + t * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += aik * brow[j];
      }
    }
  }
  return out;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double x : entries_) m = std::max(m, std::fabs(x));
  return m;
}

double trace(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("trace needs a square matrix");
  }
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (double x : a.data()) s += x * x;
  return std::sqrt(s);
}

Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows,
             std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) {
    throw DimensionError("block exceeds matrix bounds");
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out(i, j) = a(r0 + i, c0 + j);
    }
  }
  return out;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("hconcat needs equal row counts");
  }
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

bool exact_equal(const Matrix& a, const Matrix& b) {
  return a.same_shape(b) && a.data() == b.data();
}

}  // namespace mgauss
