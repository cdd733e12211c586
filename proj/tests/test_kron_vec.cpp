#include <doctest.h>

#include "mgauss/kron.hpp"
#include "mgauss/matrix.hpp"
#include "test_helpers.hpp"

using mgauss::kron;
using mgauss::Matrix;
using mgauss::unvec;
using mgauss::vec;
using namespace testutil;

TEST_SUITE("kron-vec") {
  TEST_CASE("kron: hand-expanded 2x2 example") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix b{{0, 1}, {1, 0}};
    const Matrix expected{
        {0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}};
    CHECK(exact_equal(kron(a, b), expected));
  }

  TEST_CASE("kron: identity blocks and scalar identity") {
    auto gen = make_gen(21);
    const Matrix b = random_matrix(gen, 3, 2);
    const Matrix k = kron(Matrix::identity(2), b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 4);
    for (std::size_t blk = 0; blk < 2; ++blk) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          CHECK(k(blk * 3 + i, blk * 2 + j) == b(i, j));
          CHECK(k(blk * 3 + i, (1 - blk) * 2 + j) == 0.0);
        }
      }
    }
    const Matrix a = random_matrix(gen, 4, 5);
    CHECK(exact_equal(kron(a, Matrix{{1}}), a));
    CHECK(exact_equal(kron(Matrix{{1}}, a), a));
  }

  TEST_CASE("vec and unvec examples") {
    const Matrix a{{1, 2}, {3, 4}};
    const Matrix v = vec(a);
    REQUIRE(v.rows() == 4);
    REQUIRE(v.cols() == 1);
    CHECK(v.data() == std::vector<double>{1, 3, 2, 4});

    const Matrix col{{1}, {2}, {3}};
    CHECK(exact_equal(vec(col), col));
    CHECK(exact_equal(vec(Matrix{{5}}), Matrix{{5}}));

    CHECK(exact_equal(unvec(Matrix{{1}, {3}, {2}, {4}}, 2, 2), a));
    CHECK(exact_equal(unvec(Matrix{{7}}, 1, 1), Matrix{{7}}));
    CHECK_THROWS_AS(unvec(Matrix{{1}, {2}, {3}}, 2, 2),
                    mgauss::DimensionError);
    CHECK_THROWS_AS(unvec(Matrix(2, 2), 2, 2), mgauss::DimensionError);
  }

  TEST_CASE("round trip unvec(vec(A)) is exact up to 8x8") {
    auto gen = make_gen(22);
    for (std::size_t m = 1; m <= 8; ++m) {
      for (std::size_t n = 1; n <= 8; ++n) {
        const Matrix a = random_matrix(gen, m, n);
        CHECK(exact_equal(unvec(vec(a), m, n), a));
      }
    }
  }

  TEST_CASE("transpose identity holds exactly") {
    auto gen = make_gen(23);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int rep = 0; rep < 200; ++rep) {
      const Matrix a = random_matrix(gen, dim(gen), dim(gen));
      const Matrix b = random_matrix(gen, dim(gen), dim(gen));
      CHECK(exact_equal(kron(a.transpose(), b.transpose()),
                        kron(a, b).transpose()));
    }
  }

  TEST_CASE("vec of a triple product") {
    auto gen = make_gen(24);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t m = dim(gen), n = dim(gen), p = dim(gen), k = dim(gen);
      const Matrix a = random_matrix(gen, m, n);
      const Matrix b = random_matrix(gen, n, p);
      const Matrix c = random_matrix(gen, p, k);
      CHECK(close_matrix(vec(a * b * c), kron(c.transpose(), a) * vec(b),
                         1e-12));
    }
  }

  TEST_CASE("trace of A^T B as a vec inner product") {
    auto gen = make_gen(25);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t m = dim(gen), n = dim(gen);
      const Matrix a = random_matrix(gen, m, n);
      const Matrix b = random_matrix(gen, m, n);
      const double lhs = mgauss::trace(a.transpose() * b);
      const double rhs = (vec(a).transpose() * vec(b))(0, 0);
      CHECK(close(lhs, rhs, 1e-12));
    }
  }

  TEST_CASE("mixed product with an identity factor") {
    auto gen = make_gen(26);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t m = dim(gen), n = dim(gen), p = dim(gen);
      const Matrix b = random_matrix(gen, p, m);
      const Matrix a = random_matrix(gen, m, n);
      CHECK(close_matrix(kron(Matrix::identity(n), b) * vec(a), vec(b * a),
                         1e-12));
    }
  }
}
