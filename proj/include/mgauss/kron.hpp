#pragma once

#include "mgauss/matrix.hpp"

namespace mgauss {

/// Kronecker product a (x) b: the (mp) x (nq) block matrix whose (i,j) block
/// is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization: an (rows*cols) x 1 column vector holding
/// the columns of a concatenated top to bottom.
Matrix vec(const Matrix& a);

/// Inverse of vec. v must be a column vector with m*n entries; the target
/// shape is always given explicitly.
Matrix unvec(const Matrix& v, std::size_t m, std::size_t n);

}  // namespace mgauss
