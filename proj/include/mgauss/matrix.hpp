#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mgauss/error.hpp"

namespace mgauss {

// Dense real matrix with row-major storage. Shapes are fixed at construction
// and all public constructors reject non-finite entries; every operation in
// the library treats Matrix values as immutable once built.
class Matrix {
 public:
  // Empty placeholder (0x0); only valid as an assignment target.
  Matrix() = default;

  // Zero-filled rows x cols matrix. Both dimensions must be >= 1.
  Matrix(std::size_t rows, std::size_t cols);

  // From row-major entries; length must equal rows*cols, entries finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  // From nested row lists: Matrix{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  // Square matrix with d on the diagonal.
  static Matrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return entries_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Matrix transpose() const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(double s) const;
  Matrix operator*(const Matrix& other) const;  // matrix product

  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

inline Matrix operator*(double s, const Matrix& a) { return a * s; }

double trace(const Matrix& a);
double frobenius_norm(const Matrix& a);

// Rows x cols block of a starting at (r0, c0).
Matrix block(const Matrix& a, std::size_t r0, std::size_t c0,
             std::size_t rows, std::size_t cols);

// [a b] side by side; row counts must match.
Matrix hconcat(const Matrix& a, const Matrix& b);

// Exact entrywise equality (bitwise, used by permutation contracts).
bool exact_equal(const Matrix& a, const Matrix& b);

namespace detail {

// rows*cols with overflow detection.
std::size_t checked_mul(std::size_t a, std::size_t b);

// Work threshold above which kernels spread across OpenMP threads.
inline constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

}  // namespace detail

}  // namespace mgauss
