#include "mgauss/quadform.hpp"

#include <string>

#include "mgauss/kron.hpp"

namespace mgauss {

Matrix expected_quad_form(const CrossCovariance& s_ba, const Matrix& m_a,
                          const Matrix& m_b, const Matrix& c) {
  const std::size_t m = s_ba.m(), n = s_ba.n(), p = s_ba.p();
  if (c.rows() != m || c.cols() != m) {
    throw DimensionError("expected_quad_form: c must be " + std::to_string(m) +
                         "x" + std::to_string(m));
  }
  if (m_a.rows() != m || m_a.cols() != n || m_b.rows() != m ||
      m_b.cols() != p) {
    throw DimensionError(
        "expected_quad_form: means do not match the cross covariance shape");
  }
  const Matrix centered = unvec(s_ba.s_ba().transpose() * vec(c), n, p);
  return centered + m_a.transpose() * c * m_b;
}

Matrix expected_quad_form_exact_oracle(const JointMatrixGaussian& joint,
                                       const Matrix& c) {
  const std::size_t m = joint.rows();
  const std::size_t n = joint.cols_a();
  const std::size_t p = joint.cols_b();
  if (c.rows() != m || c.cols() != m) {
    throw DimensionError("expected_quad_form_exact_oracle: c must be " +
                         std::to_string(m) + "x" + std::to_string(m));
  }
  const Matrix& sab = joint.sigma_ab();
  Matrix out = joint.mean_a().transpose() * c * joint.mean_b();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          // Cov(A_ki, B_lj) from the vec blocks of the joint.
          acc += c(k, l) * sab(i * m + k, j * m + l);
        }
      }
      out(i, j) += acc;
    }
  }
  return out;
}

double scalar_quad_form(const Matrix& eqf, const Matrix& x, const Matrix& u) {
  if (x.cols() != 1 || u.cols() != 1 || x.rows() != eqf.rows() ||
      u.rows() != eqf.cols()) {
    throw DimensionError("scalar_quad_form: x and u must be column vectors "
                         "matching the expected quadratic form");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < eqf.rows(); ++i) {
    for (std::size_t j = 0; j < eqf.cols(); ++j) {
      acc += x(i, 0) * eqf(i, j) * u(j, 0);
    }
  }
  return acc;
}

}  // namespace mgauss
