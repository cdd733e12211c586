#include <doctest.h>

#include <cmath>

#include "mgauss/kron.hpp"
#include "mgauss/spd.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using mgauss::Matrix;
using mgauss::SpdMatrix;
using namespace testutil;

TEST_SUITE("spd-core") {
  TEST_CASE("factorization examples") {
    const SpdMatrix id(Matrix::identity(3));
    CHECK(exact_equal(id.chol_lower(), Matrix::identity(3)));

    // Hand Cholesky: [[4,2],[2,2]] = L L^T with L = [[2,0],[1,1]].
    const SpdMatrix s(Matrix{{4, 2}, {2, 2}});
    CHECK(exact_equal(s.chol_lower(), Matrix{{2, 0}, {1, 1}}));

    // Eigenvalues 3 and -1: rejected.
    CHECK_THROWS_AS(SpdMatrix(Matrix{{1, 2}, {2, 1}}),
                    mgauss::NotPositiveDefiniteError);
    CHECK_THROWS_AS(SpdMatrix(Matrix(2, 3)), mgauss::DimensionError);
  }

  TEST_CASE("symmetrization happens before factorization") {
    const SpdMatrix s(Matrix{{4.0, 2.2}, {1.8, 2.0}});
    CHECK(s.matrix()(0, 1) == 2.0);
    CHECK(s.matrix()(1, 0) == 2.0);
  }

  TEST_CASE("pivot tolerance is relative to the largest diagonal entry") {
    CHECK_THROWS_AS(SpdMatrix(Matrix{{1, 1}, {1, 1}}),
                    mgauss::NotPositiveDefiniteError);
    CHECK_THROWS_AS(SpdMatrix(Matrix{{1.0, 1.0}, {1.0, 1.0 + 1e-15}}),
                    mgauss::NotPositiveDefiniteError);
    // The same matrix passes once the tolerance is loosened to zero.
    CHECK_NOTHROW(SpdMatrix(Matrix{{1.0, 1.0}, {1.0, 1.0 + 1e-15}}, 0.0));
    CHECK_THROWS_AS(SpdMatrix(Matrix{{-2, 0}, {0, -3}}),
                    mgauss::NotPositiveDefiniteError);
  }

  TEST_CASE("factor reproduces the matrix") {
    auto gen = make_gen(31);
    for (std::size_t n : {1, 2, 4, 7, 10}) {
      const SpdMatrix s = random_spd(gen, n);
      const Matrix rebuilt = s.chol_lower() * s.chol_lower().transpose();
      CHECK(mgauss::frobenius_norm(rebuilt - s.matrix()) <=
            1e-10 * mgauss::frobenius_norm(s.matrix()));
      for (std::size_t i = 0; i < n; ++i) CHECK(s.chol_lower()(i, i) > 0.0);
    }
  }

  TEST_CASE("solve examples") {
    const SpdMatrix id(Matrix::identity(4));
    auto gen = make_gen(32);
    const Matrix b = random_matrix(gen, 4, 3);
    CHECK(exact_equal(id.solve(b), b));

    const SpdMatrix d(Matrix::diagonal({2, 4}));
    CHECK(close_matrix(d.solve(Matrix{{2}, {4}}), Matrix{{1}, {1}}, 1e-14));

    CHECK_THROWS_AS(d.solve(Matrix(3, 1)), mgauss::DimensionError);
  }

  TEST_CASE("multiply-then-solve round trip") {
    auto gen = make_gen(33);
    for (std::size_t n : {1, 3, 6, 10}) {
      const SpdMatrix s = random_spd(gen, n);
      const Matrix x = random_matrix(gen, n, 2);
      const Matrix back = s.solve(s.matrix() * x);
      CHECK(max_abs_diff(back, x) <= 1e-8 * std::max(1.0, x.max_abs()));
    }
  }

  TEST_CASE("quadratic form is positive on random probes") {
    auto gen = make_gen(34);
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t n = 1 + rep % 6;
      const SpdMatrix s = random_spd(gen, n);
      const Matrix v = random_matrix(gen, n, 1);
      if (v.max_abs() == 0.0) continue;
      const Matrix q = v.transpose() * s.matrix() * v;
      CHECK(q(0, 0) > 0.0);
    }
  }

  TEST_CASE("logdet examples and eigenvalue oracle") {
    CHECK(SpdMatrix(Matrix::identity(5)).logdet() == 0.0);

    const double e = std::exp(1.0);
    CHECK(close(SpdMatrix(Matrix::diagonal({e, e})).logdet(), 2.0, 1e-12));

    auto gen = make_gen(35);
    for (std::size_t n : {2, 4, 8}) {
      const SpdMatrix s = random_spd(gen, n);
      double oracle_sum = 0.0;
      for (double lam : oracle::jacobi_eigenvalues(s.matrix())) {
        oracle_sum += std::log(lam);
      }
      CHECK(close(s.logdet(), oracle_sum, 1e-9));
    }
  }

  TEST_CASE("logdet of a Kronecker product splits by dimension") {
    auto gen = make_gen(36);
    const SpdMatrix u = random_spd(gen, 3);
    const SpdMatrix v = random_spd(gen, 4);
    const SpdMatrix k(mgauss::kron(u.matrix(), v.matrix()));
    CHECK(close(k.logdet(), 4.0 * u.logdet() + 3.0 * v.logdet(), 1e-9));
  }
}
