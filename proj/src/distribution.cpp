#include "mgauss/distribution.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>

#include "mgauss/kron.hpp"

namespace mgauss {

namespace {

constexpr double kLog2Pi = 1.8378770664093453;  // ln(2*pi)

Matrix assemble_full(const SpdMatrix& aa, const Matrix& ab,
                     const SpdMatrix& bb) {
  const std::size_t da = aa.dim(), db = bb.dim();
  if (ab.rows() != da || ab.cols() != db) {
    throw DimensionError("joint cross block must be " + std::to_string(da) +
                         "x" + std::to_string(db) + ", got " +
                         std::to_string(ab.rows()) + "x" +
                         std::to_string(ab.cols()));
  }
  Matrix full(da + db, da + db);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) full(i, j) = aa.matrix()(i, j);
    for (std::size_t j = 0; j < db; ++j) full(i, da + j) = ab(i, j);
  }
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < da; ++j) full(da + i, j) = ab(j, i);
    for (std::size_t j = 0; j < db; ++j) full(da + i, da + j) = bb.matrix()(i, j);
  }
  return full;
}

}  // namespace

MatrixGaussian::MatrixGaussian(Matrix mean, SpdMatrix sigma)
    : mean_(std::move(mean)), sigma_(std::move(sigma)) {
  if (sigma_.dim() != detail::checked_mul(mean_.rows(), mean_.cols())) {
    throw DimensionError("covariance dim " + std::to_string(sigma_.dim()) +
                         " does not match vec dimension " +
                         std::to_string(mean_.rows() * mean_.cols()));
  }
}

double MatrixGaussian::log_pdf(const Matrix& a) const {
  if (!a.same_shape(mean_)) {
    throw DimensionError("log_pdf: argument shape does not match the mean");
  }
  const Matrix r = vec(a - mean_);
  const Matrix y = solve_lower(sigma_.chol_lower(), r);
  double quad = 0.0;
  for (double v : y.data()) quad += v * v;
  const double d = static_cast<double>(vec_dim());
  return -0.5 * (d * kLog2Pi + sigma_.logdet() + quad);
}

double MatrixGaussian::entropy() const {
  const double d = static_cast<double>(vec_dim());
  return 0.5 * (d * (kLog2Pi + 1.0) + sigma_.logdet());
}

Matrix MatrixGaussian::sample(RandomState& rng) const {
  const std::size_t d = vec_dim();
  Matrix z(d, 1);
  for (std::size_t i = 0; i < d; ++i) z(i, 0) = rng.next_normal();
  return mean_ + unvec(sigma_.chol_lower() * z, rows(), cols());
}

std::vector<Matrix> MatrixGaussian::sample_many(std::uint64_t seed,
                                                std::size_t count) const {
  std::vector<Matrix> out(count);
#pragma omp parallel for schedule(static) if (count >= 128)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
    RandomState rng(seed, static_cast<std::uint64_t>(k));
    out[static_cast<std::size_t>(k)] = sample(rng);
  }
  return out;
}

MatrixGaussian MatrixGaussian::affine_map(const Matrix& b,
                                          const Matrix& c) const {
  if (b.cols() != rows()) {
    throw DimensionError("affine_map: b has " + std::to_string(b.cols()) +
                         " columns, variable has " + std::to_string(rows()) +
                         " rows");
  }
  if (c.rows() != b.rows() || c.cols() != cols()) {
    throw DimensionError("affine_map: shift must be " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(cols()) + ", got " +
                         std::to_string(c.rows()) + "x" +
                         std::to_string(c.cols()));
  }
  const Matrix k = kron(Matrix::identity(cols()), b);
  const Matrix cov = k * sigma_.matrix() * k.transpose();
  return MatrixGaussian(b * mean_ + c, SpdMatrix(symmetrize(cov)));
}

JointMatrixGaussian::JointMatrixGaussian(Matrix mean_a, Matrix mean_b,
                                         SpdMatrix sigma_aa, Matrix sigma_ab,
                                         SpdMatrix sigma_bb)
    : mean_a_(std::move(mean_a)),
      mean_b_(std::move(mean_b)),
      sigma_aa_(std::move(sigma_aa)),
      sigma_ab_(std::move(sigma_ab)),
      sigma_bb_(std::move(sigma_bb)),
      full_(SpdMatrix(assemble_full(sigma_aa_, sigma_ab_, sigma_bb_))) {
  if (mean_a_.rows() != mean_b_.rows()) {
    throw DimensionError("joint blocks must share the row count");
  }
  const std::size_t da = mean_a_.size(), db = mean_b_.size();
  if (sigma_aa_.dim() != da || sigma_bb_.dim() != db ||
      sigma_ab_.rows() != da || sigma_ab_.cols() != db) {
    throw DimensionError("joint covariance blocks do not match the means");
  }
}

JointMatrixGaussian JointMatrixGaussian::from_combined(const MatrixGaussian& d,
                                                       std::size_t n_a) {
  if (n_a == 0 || n_a >= d.cols()) {
    throw DimensionError("from_combined: split point must leave both blocks "
                         "at least one column");
  }
  const std::size_t m = d.rows();
  const std::size_t n_b = d.cols() - n_a;
  const std::size_t da = n_a * m, db = n_b * m;
  const Matrix& sig = d.sigma().matrix();
  return JointMatrixGaussian(
      block(d.mean(), 0, 0, m, n_a), block(d.mean(), 0, n_a, m, n_b),
      SpdMatrix(block(sig, 0, 0, da, da)), block(sig, 0, da, da, db),
      SpdMatrix(block(sig, da, da, db, db)));
}

MatrixGaussian JointMatrixGaussian::combined() const {
  return MatrixGaussian(hconcat(mean_a_, mean_b_), full_);
}

MatrixGaussian JointMatrixGaussian::marginal(Block which) const {
  if (which == Block::A) return MatrixGaussian(mean_a_, sigma_aa_);
  return MatrixGaussian(mean_b_, sigma_bb_);
}

MatrixGaussian JointMatrixGaussian::conditional(
    const Matrix& observed_b) const {
  if (!observed_b.same_shape(mean_b_)) {
    throw DimensionError("conditional: observation must be " +
                         std::to_string(mean_b_.rows()) + "x" +
                         std::to_string(mean_b_.cols()) + ", got " +
                         std::to_string(observed_b.rows()) + "x" +
                         std::to_string(observed_b.cols()));
  }
  const Matrix shift = sigma_ab_ * sigma_bb_.solve(vec(observed_b - mean_b_));
  const Matrix mean = mean_a_ + unvec(shift, rows(), cols_a());
  // Schur complement Sigma_AA - Sigma_AB Sigma_BB^-1 Sigma_AB^T.
  const Matrix cov =
      sigma_aa_.matrix() - sigma_ab_ * sigma_bb_.solve(sigma_ab_.transpose());
  return MatrixGaussian(mean, SpdMatrix(symmetrize(cov)));
}

Matrix sample_mean(const std::vector<Matrix>& samples) {
  if (samples.empty()) throw DimensionError("sample_mean of an empty batch");
  const std::size_t rows = samples[0].rows(), cols = samples[0].cols();
  for (const Matrix& s : samples) {
    if (s.rows() != rows || s.cols() != cols) {
      throw DimensionError("sample batch has mixed shapes");
    }
  }
  const std::size_t entries = rows * cols;
  const double inv_n = 1.0 / static_cast<double>(samples.size());
  Matrix out(rows, cols);
#pragma omp parallel for schedule(static) \
    if (entries * samples.size() >= detail::kParallelWorkThreshold)
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(entries); ++e) {
    const std::size_t i = static_cast<std::size_t>(e) / cols;
    const std::size_t j = static_cast<std::size_t>(e) % cols;
    double acc = 0.0;
    for (const Matrix& s : samples) acc += s(i, j);
    out(i, j) = acc * inv_n;
  }
  return out;
}

Matrix sample_vec_covariance(const std::vector<Matrix>& samples,
                             const Matrix& mean) {
  if (samples.empty()) {
    throw DimensionError("sample_vec_covariance of an empty batch");
  }
  const std::size_t m = mean.rows(), n = mean.cols();
  const std::size_t d = m * n;
  const std::size_t count = samples.size();
  const bool par = d * d * count >= detail::kParallelWorkThreshold;
  for (const Matrix& s : samples) {
    if (!s.same_shape(mean)) {
      throw DimensionError("sample batch has mixed shapes");
    }
  }

  // Component-major staging buffer: row r holds vec-component r of every
  // centered sample, so each covariance entry below is one contiguous dot.
  std::vector<double> t(d * count);
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
    const Matrix& s = samples[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        t[(j * m + i) * count + static_cast<std::size_t>(k)] =
            s(i, j) - mean(i, j);
      }
    }
  }

  const double inv_n = 1.0 / static_cast<double>(count);
  Matrix cov(d, d);
  // One entry per iteration, inner sum in batch order: deterministic under
  // any thread count. Only r <= c is computed; the mirror entry sums the
  // same products in the same order.
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t e = 0; e < static_cast<std::int64_t>(d * d); ++e) {
    const std::size_t r = static_cast<std::size_t>(e) / d;
    const std::size_t c = static_cast<std::size_t>(e) % d;
    if (r > c) continue;
    const double* tr = t.data() + r * count;
    const double* tc = t.data() + c * count;
    double acc = 0.0;
    for (std::size_t k = 0; k < count; ++k) acc += tr[k] * tc[k];
    acc *= inv_n;
    cov(r, c) = acc;
    if (r != c) cov(c, r) = acc;
  }
  return cov;
}

MatrixGaussian fit_mle(const std::vector<Matrix>& samples, double jitter) {
  if (samples.size() < 2) {
    throw DimensionError("fit_mle needs at least two samples");
  }
  if (jitter < 0.0 || !std::isfinite(jitter)) {
    throw ValueError("fit_mle jitter must be finite and non-negative");
  }
  const Matrix mean = sample_mean(samples);
  Matrix cov = sample_vec_covariance(samples, mean);
  for (std::size_t i = 0; i < cov.rows(); ++i) cov(i, i) += jitter;
  return MatrixGaussian(mean, SpdMatrix(cov));
}

}  // namespace mgauss
