// Times the OpenMP kernels against the serial reference implementations.
// Build and run: cmake --build build --target mgauss_bench && ./build/bench/mgauss_bench

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mgauss/distribution.hpp"
#include "mgauss/kron.hpp"
#include "mgauss/matrix.hpp"
#include "mgauss/reference.hpp"
#include "mgauss/spd.hpp"

using mgauss::Matrix;

namespace {

Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = dist(gen);
  }
  return out;
}

template <typename F>
double best_of_three_ms(F&& body) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, const char* size, double serial_ms,
            double parallel_ms) {
  std::printf("%-22s %-14s %10.2f ms %10.2f ms %8.2fx\n", name, size, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif
  std::printf("%-22s %-14s %13s %13s %9s\n", "kernel", "size", "serial",
              "parallel", "speedup");

  std::mt19937_64 gen(2024);

  {
    const Matrix a = random_matrix(gen, 384, 384);
    const Matrix b = random_matrix(gen, 384, 384);
    Matrix sink;
    const double serial =
        best_of_three_ms([&] { sink = mgauss::reference::matmul(a, b); });
    const double parallel = best_of_three_ms([&] { sink = a * b; });
    report("matmul", "384x384", serial, parallel);
  }

  {
    const Matrix a = random_matrix(gen, 48, 48);
    const Matrix b = random_matrix(gen, 24, 24);
    Matrix sink;
    const double serial =
        best_of_three_ms([&] { sink = mgauss::reference::kron(a, b); });
    const double parallel = best_of_three_ms([&] { sink = mgauss::kron(a, b); });
    report("kron", "48x48 (x)24x24", serial, parallel);
  }

  const std::size_t draw_count = 20000;
  const Matrix mean = random_matrix(gen, 6, 6);
  const Matrix base = random_matrix(gen, 36, 36);
  const mgauss::SpdMatrix cov(base * base.transpose() +
                              Matrix::identity(36) * 0.5);
  const mgauss::MatrixGaussian d(mean, cov);
  std::vector<Matrix> draws;
  {
    const double serial = best_of_three_ms(
        [&] { draws = mgauss::reference::sample_many(d, 7, draw_count); });
    const double parallel =
        best_of_three_ms([&] { draws = d.sample_many(7, draw_count); });
    report("sample_many", "6x6 x 20000", serial, parallel);
  }

  {
    Matrix sink;
    const double serial = best_of_three_ms(
        [&] { sink = mgauss::reference::sample_vec_covariance(draws, mean); });
    const double parallel = best_of_three_ms(
        [&] { sink = mgauss::sample_vec_covariance(draws, mean); });
    report("sample_vec_covariance", "36^2 x 20000", serial, parallel);
  }

  return 0;
}
