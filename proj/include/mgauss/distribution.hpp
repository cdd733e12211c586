#pragma once

#include <cstdint>
#include <vector>

#include "mgauss/matrix.hpp"
#include "mgauss/rng.hpp"
#include "mgauss/spd.hpp"

namespace mgauss {

// Gaussian distribution over m x n real matrices, parameterized by the mean
// matrix M and the full covariance Sigma of vec(A), an (nm) x (nm) SPD
// matrix. No structure is imposed on Sigma.
class MatrixGaussian {
 public:
  MatrixGaussian(Matrix mean, SpdMatrix sigma);

  std::size_t rows() const { return mean_.rows(); }
  std::size_t cols() const { return mean_.cols(); }
  std::size_t vec_dim() const { return sigma_.dim(); }

  const Matrix& mean() const { return mean_; }
  const SpdMatrix& sigma() const { return sigma_; }

  double log_pdf(const Matrix& a) const;
  double entropy() const;

  // One draw, consuming nm normals from rng.
  Matrix sample(RandomState& rng) const;

  // count independent draws; draw k always comes from stream k of the seed,
  // so the result is identical whether the loop runs serial or parallel.
  std::vector<Matrix> sample_many(std::uint64_t seed, std::size_t count) const;

  // Distribution of B*A + C for constant b (p x m) and c (p x n). The output
  // covariance (I_n (x) B) Sigma (I_n (x) B)^T is symmetrized and then
  // SPD-validated; a row-rank-deficient b makes the image degenerate and is
  // reported as NotPositiveDefiniteError.
  MatrixGaussian affine_map(const Matrix& b, const Matrix& c) const;

 private:
  Matrix mean_;
  SpdMatrix sigma_;
};

// Joint Gaussian law of the column blocks of [A B], an m x (n_a + n_b)
// random matrix. vec([A B]) is the concatenation of vec(A) and vec(B), so
// the assembled covariance over vec([A B]) is exactly the block matrix
// [[Sigma_AA, Sigma_AB], [Sigma_AB^T, Sigma_BB]]; it is SPD-validated at
// construction.
class JointMatrixGaussian {
 public:
  enum class Block { A, B };

  JointMatrixGaussian(Matrix mean_a, Matrix mean_b, SpdMatrix sigma_aa,
                      Matrix sigma_ab, SpdMatrix sigma_bb);

  // Split an m x n matrix Gaussian into blocks of n_a and n - n_a columns.
  static JointMatrixGaussian from_combined(const MatrixGaussian& d,
                                           std::size_t n_a);

  // The joint viewed as a single matrix Gaussian over m x (n_a + n_b).
  MatrixGaussian combined() const;

  std::size_t rows() const { return mean_a_.rows(); }
  std::size_t cols_a() const { return mean_a_.cols(); }
  std::size_t cols_b() const { return mean_b_.cols(); }

  const Matrix& mean_a() const { return mean_a_; }
  const Matrix& mean_b() const { return mean_b_; }
  const SpdMatrix& sigma_aa() const { return sigma_aa_; }
  const Matrix& sigma_ab() const { return sigma_ab_; }
  const SpdMatrix& sigma_bb() const { return sigma_bb_; }
  const SpdMatrix& full() const { return full_; }

  MatrixGaussian marginal(Block which) const;

  // Law of A given B = observed_b: mean M_A + unvec(Sigma_AB Sigma_BB^-1
  // vec(observed_b - M_B)) and Schur-complement covariance, symmetrized and
  // SPD-validated.
  MatrixGaussian conditional(const Matrix& observed_b) const;

 private:
  Matrix mean_a_;
  Matrix mean_b_;
  SpdMatrix sigma_aa_;
  Matrix sigma_ab_;
  SpdMatrix sigma_bb_;
  SpdMatrix full_;
};

// Entrywise average of a non-empty batch of equally shaped matrices.
Matrix sample_mean(const std::vector<Matrix>& samples);

// (1/N) sum of vec(A_i - mean) vec(A_i - mean)^T, the maximum-likelihood
// covariance of the batch (no Bessel correction).
Matrix sample_vec_covariance(const std::vector<Matrix>& samples,
                             const Matrix& mean);

// Maximum-likelihood fit: sample average mean and 1/N vec-covariance plus
// jitter * I, SPD-validated. Needs at least two samples of equal shape.
MatrixGaussian fit_mle(const std::vector<Matrix>& samples, double jitter);

}  // namespace mgauss
