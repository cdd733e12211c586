#pragma once

#include "mgauss/covariance.hpp"
#include "mgauss/distribution.hpp"
#include "mgauss/matrix.hpp"

namespace mgauss {

// E[A^T C B] for random A (m x n), B (m x p) and constant C (m x m), from
// second moments alone:
//
//   E[A^T C B] = unvec(S_BA^T vec(C), n, p) + M_A^T C M_B.
Matrix expected_quad_form(const CrossCovariance& s_ba, const Matrix& m_a,
                          const Matrix& m_b, const Matrix& c);

// Same expectation computed entrywise from first principles,
//   entry (i, j) = sum_{k,l} C(k,l) Cov(A_ki, B_lj) + (M_A^T C M_B)(i, j),
// reading covariances straight off the joint's Sigma_AB block. Slower and
// deliberately independent of the Kronecker machinery; kept as the
// verification path for expected_quad_form.
Matrix expected_quad_form_exact_oracle(const JointMatrixGaussian& joint,
                                       const Matrix& c);

// x^T E[A^T C B] u for fixed vectors x (n x 1) and u (p x 1), with eqf the
// output of expected_quad_form.
double scalar_quad_form(const Matrix& eqf, const Matrix& x, const Matrix& u);

}  // namespace mgauss
