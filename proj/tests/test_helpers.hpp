#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "mgauss/matrix.hpp"
#include "mgauss/spd.hpp"

namespace testutil {

using mgauss::Matrix;

inline std::mt19937_64 make_gen(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Matrix random_matrix(std::mt19937_64& gen, std::size_t rows,
                            std::size_t cols, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = dist(gen);
  }
  return out;
}

inline Matrix random_orthogonal(std::mt19937_64& gen, std::size_t n) {
  for (;;) {
    Matrix a = random_matrix(gen, n, n);
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += a(i, j) * a(i, k);
        for (std::size_t i = 0; i < n; ++i) a(i, j) -= dot * a(i, k);
      }
      double nrm = 0.0;
      for (std::size_t i = 0; i < n; ++i) nrm += a(i, j) * a(i, j);
      nrm = std::sqrt(nrm);
      if (nrm < 1e-6) {
        ok = false;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) a(i, j) /= nrm;
    }
    if (ok) return a;
  }
}

// Exactly symmetric SPD matrix with eigenvalues drawn from [eig_lo, eig_hi].
inline Matrix random_spd_matrix(std::mt19937_64& gen, std::size_t n,
                                double eig_lo = 0.1, double eig_hi = 2.0) {
  const Matrix q = random_orthogonal(gen, n);
  std::uniform_real_distribution<double> eig(eig_lo, eig_hi);
  std::vector<double> lam(n);
  for (double& l : lam) l = eig(gen);
  Matrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += lam[k] * q(i, k) * q(j, k);
      s(i, j) = acc;
      s(j, i) = acc;
    }
  }
  return s;
}

inline mgauss::SpdMatrix random_spd(std::mt19937_64& gen, std::size_t n,
                                    double eig_lo = 0.1, double eig_hi = 2.0) {
  return mgauss::SpdMatrix(random_spd_matrix(gen, n, eig_lo, eig_hi));
}

// |a - b| <= tol * max(1, |a|, |b|): absolute on unit scale, relative above.
inline bool close(double a, double b, double tol) {
  return std::fabs(a - b) <=
         tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    m = std::max(m, std::fabs(a.data()[k] - b.data()[k]));
  }
  return m;
}

inline bool close_matrix(const Matrix& a, const Matrix& b, double tol) {
  if (!a.same_shape(b)) return false;
  return max_abs_diff(a, b) <= tol * std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace testutil
