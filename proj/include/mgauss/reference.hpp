#pragma once

#include <cstdint>
#include <vector>

#include "mgauss/distribution.hpp"
#include "mgauss/matrix.hpp"

namespace mgauss::reference {

// Straightforward single-threaded versions of the kernels that run under
// OpenMP in the main path. Tests pin the parallel implementations against
// these bit for bit, and the benchmark times the two side by side.

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
std::vector<Matrix> sample_many(const MatrixGaussian& d, std::uint64_t seed,
                                std::size_t count);
Matrix sample_mean(const std::vector<Matrix>& samples);
Matrix sample_vec_covariance(const std::vector<Matrix>& samples,
                             const Matrix& mean);

}  // namespace mgauss::reference
