#include "vulnscan/kernels.hpp"

#include <cstring>

// Reference kernels. The SIMD backends mirror these loops lane for lane;
// any change here must be reflected there to keep results bit-identical.

namespace vulnscan::kernels {
namespace {

void matmul_scalar(double* c, const double* a, const double* b,
                   std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    const double* arow = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      const double* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        crow[j] += av * brow[j];
      }
    }
  }
}

void add_scalar(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void mul_scalar(double* dst, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* dst, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = alpha * x[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double p[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) p[i & 3] += a[i] * b[i];
  return (p[0] + p[1]) + (p[2] + p[3]);
}

double sum_scalar(const double* x, std::size_t n) {
  double p[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) p[i & 3] += x[i];
  return (p[0] + p[1]) + (p[2] + p[3]);
}

}  // namespace

const Backend& scalar_backend() {
  static const Backend backend{
      "scalar",     matmul_scalar, add_scalar, mul_scalar,
      axpy_scalar,  scale_scalar,  dot_scalar, sum_scalar,
  };
  return backend;
}

}  // namespace vulnscan::kernels
