#include "mgauss/reference.hpp"

#include "mgauss/kron.hpp"
#include "mgauss/rng.hpp"

namespace mgauss::reference {

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("reference matmul dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < a.cols(); ++t) acc += a(i, t) * b(t, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t s = 0; s < b.rows(); ++s) {
        for (std::size_t t = 0; t < b.cols(); ++t) {
          out(i * b.rows() + s, j * b.cols() + t) = a(i, j) * b(s, t);
        }
      }
    }
  }
  return out;
}

std::vector<Matrix> sample_many(const MatrixGaussian& d, std::uint64_t seed,
                                std::size_t count) {
  std::vector<Matrix> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    RandomState rng(seed, k);
    out.push_back(d.sample(rng));
  }
  return out;
}

Matrix sample_mean(const std::vector<Matrix>& samples) {
  if (samples.empty()) throw DimensionError("sample_mean of an empty batch");
  Matrix acc(samples[0].rows(), samples[0].cols());
  for (const Matrix& s : samples) acc = acc + s;
  return acc * (1.0 / static_cast<double>(samples.size()));
}

Matrix sample_vec_covariance(const std::vector<Matrix>& samples,
                             const Matrix& mean) {
  const std::size_t d = mean.rows() * mean.cols();
  Matrix cov(d, d);
  for (const Matrix& s : samples) {
    const Matrix z = vec(s - mean);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        cov(r, c) += z(r, 0) * z(c, 0);
      }
    }
  }
  return cov * (1.0 / static_cast<double>(samples.size()));
}

}  // namespace mgauss::reference
