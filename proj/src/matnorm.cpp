#include "mgauss/matnorm.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mgauss/kron.hpp"

namespace mgauss {

MatrixNormal::MatrixNormal(Matrix mean, SpdMatrix u, SpdMatrix v)
    : mean_(std::move(mean)), u_(std::move(u)), v_(std::move(v)) {
  if (u_.dim() != mean_.rows() || v_.dim() != mean_.cols()) {
    throw DimensionError("matrix normal factors must match the mean: u is " +
                         std::to_string(u_.dim()) + ", v is " +
                         std::to_string(v_.dim()) + ", mean is " +
                         std::to_string(mean_.rows()) + "x" +
                         std::to_string(mean_.cols()));
  }
}

MatrixGaussian MatrixNormal::to_full() const {
  return MatrixGaussian(mean_, SpdMatrix(kron(v_.matrix(), u_.matrix())));
}

ParamCount param_count_ratio(std::size_t n, std::size_t p) {
  if (n == 0 || p == 0) {
    throw DimensionError("param_count_ratio needs positive dimensions");
  }
  const std::size_t structured =
      detail::checked_mul(n, n) + detail::checked_mul(p, p);
  const std::size_t full = detail::checked_mul(detail::checked_mul(n, p),
                                               detail::checked_mul(n, p));
  return ParamCount{structured, full,
                    static_cast<double>(structured) / static_cast<double>(full)};
}

DiagRepresentability check_diag_representable(const Matrix& variances,
                                              double rel_tol) {
  for (double x : variances.data()) {
    if (!(x > 0.0)) {
      throw ValueError("check_diag_representable: variances must be positive");
    }
  }
  const std::size_t n = variances.rows(), p = variances.cols();
  // A positive grid is representable exactly when it factors entrywise as
  // u_i * v_j; anchoring u on the first column and v on the first row gives
  // the factorization normalized to u[0] = 1.
  std::vector<double> u(n), v(p);
  for (std::size_t i = 0; i < n; ++i) u[i] = variances(i, 0) / variances(0, 0);
  for (std::size_t j = 0; j < p; ++j) v[j] = variances(0, j);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (std::fabs(variances(i, j) - u[i] * v[j]) >
          rel_tol * variances(i, j)) {
        return DiagRepresentability{};
      }
    }
  }
  return DiagRepresentability{true, std::move(u), std::move(v)};
}

namespace {

double column_norm(const Matrix& x) {
  double s = 0.0;
  for (double e : x.data()) s += e * e;
  return std::sqrt(s);
}

bool is_spd(const Matrix& a) {
  try {
    SpdMatrix probe(a);
    return true;
  } catch (const NotPositiveDefiniteError&) {
    return false;
  }
}

}  // namespace

NearestKroneckerResult nearest_kron_covariance(const SpdMatrix& sigma,
                                               std::size_t n, std::size_t p,
                                               std::size_t iters) {
  if (sigma.dim() != detail::checked_mul(n, p)) {
    throw DimensionError("nearest_kron_covariance: covariance dim " +
                         std::to_string(sigma.dim()) +
                         " does not equal n*p = " + std::to_string(n * p));
  }
  const Matrix& sig = sigma.matrix();

  // Rearrange: r[j*n + i, b*p + a] = Sigma[a*n + i, b*n + j], so an exact
  // Kronecker covariance V (x) U becomes the rank-one matrix
  // vec(U) vec(V)^T.
  Matrix r(n * n, p * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < p; ++b) {
          r(j * n + i, b * p + a) = sig(a * n + i, b * n + j);
        }
      }
    }
  }

  Matrix y(p * p, 1);
  y(0, 0) = 1.0;
  Matrix x(n * n, 1);
  const Matrix rt = r.transpose();
  for (std::size_t it = 0; it < iters; ++it) {
    x = r * y;
    const double xn = column_norm(x);
    if (xn == 0.0) break;
    x = x * (1.0 / xn);
    y = rt * x;
    const double yn = column_norm(y);
    if (yn == 0.0) break;
    y = y * (1.0 / yn);
  }
  double scale = 0.0;
  {
    const Matrix ry = r * y;
    for (std::size_t e = 0; e < x.rows(); ++e) scale += x(e, 0) * ry(e, 0);
  }

  Matrix u = symmetrize(unvec(x, n, n));
  Matrix v = symmetrize(unvec(y, p, p)) * scale;
  if (trace(u) < 0.0) {
    u = u * -1.0;
    v = v * -1.0;
  }
  const double tr = trace(u);
  if (tr != 0.0) {
    const double gauge = static_cast<double>(n) / tr;
    u = u * gauge;
    v = v * (1.0 / gauge);
  }

  NearestKroneckerResult result;
  result.residual = frobenius_norm(sig - kron(v, u));
  result.relative_residual = result.residual / frobenius_norm(sig);
  result.factors_positive_definite = is_spd(u) && is_spd(v);
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

}  // namespace mgauss
