#pragma once

#include "mgauss/distribution.hpp"
#include "mgauss/matrix.hpp"
#include "mgauss/spd.hpp"

namespace mgauss {

// The two covariance representations of an m x n matrix variable A:
//
//   Sigma = Cov(vec A), an (nm) x (nm) SPD matrix, and
//   S     = E[(A - M) (x) (A - M)], an m^2 x n^2 matrix.
//
// They carry the same information entry for entry. With 0-based indices
// i, k < m and j, l < n the dictionary used throughout this module is
//
//   S[i*m + k, j*n + l] = Cov(A_ij, A_kl) = Sigma[j*m + i, l*m + k],
//
// where vec ordering places entry (i, j) at position j*m + i. Converting in
// either direction is a pure index permutation; no arithmetic happens.
//
// The image of Sigma's symmetry in S is "swap symmetry": exchanging the
// (block, within-block) row pair with the column pair leaves S unchanged,
// i.e. S[i*m + k, j*n + l] = S[k*m + i, l*n + j].

class KroneckerCovariance {
 public:
  static constexpr double kDefaultSwapTol = 1e-10;

  // s must be m^2 x n^2 and swap-symmetric within swap_tol (absolute).
  KroneckerCovariance(std::size_t m, std::size_t n, Matrix s,
                      double swap_tol = kDefaultSwapTol);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  const Matrix& s() const { return s_; }

 private:
  std::size_t m_;
  std::size_t n_;
  Matrix s_;
};

// Sigma -> S for an m x n variable; requires sigma.dim() == n*m.
KroneckerCovariance sigma_to_s(const SpdMatrix& sigma, std::size_t m,
                               std::size_t n);

// S -> Sigma; the inverse permutation, SPD-validated on the way out.
// Round trips through sigma_to_s are bit-exact.
SpdMatrix s_to_sigma(const KroneckerCovariance& s,
                     double pd_tol = SpdMatrix::kDefaultPdTol);

// Cross-covariance S_BA = E[(B - M_B) (x) (A - M_A)] of two random matrices
// A (m x n) and B (m x p) sharing the row count m. Stored dense, m row
// blocks of size m by p column blocks of size n:
//   S_BA[i*m + k, j*n + l] = Cov(B_ij, A_kl).
class CrossCovariance {
 public:
  CrossCovariance(std::size_t m, std::size_t n, std::size_t p, Matrix s_ba);

  // The B = A specialization: S_AA is the Kronecker covariance itself.
  static CrossCovariance self(const KroneckerCovariance& s);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  const Matrix& s_ba() const { return s_ba_; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t p_;
  Matrix s_ba_;
};

// S_BA of a joint law over [A B], read entry by entry from the joint's
// Sigma_AB block.
CrossCovariance cross_cov_from_joint(const JointMatrixGaussian& joint);

}  // namespace mgauss
