#include "vulnscan/kernels.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <cstring>

// NEON variants (2-wide float64). Two registers together cover the four
// interleaved partials of the reference reduction order; per-lane mul/add
// round exactly like scalar, so outputs match the scalar backend bit for
// bit. No fused ops.

namespace vulnscan::kernels {
namespace {

void matmul_neon(double* c, const double* a, const double* b,
                 std::size_t m, std::size_t k, std::size_t n) {
  std::memset(c, 0, m * n * sizeof(double));
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = c + i * n;
    const double* arow = a + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      const double* brow = b + p * n;
      const float64x2_t vav = vdupq_n_f64(av);
      std::size_t j = 0;
      for (; j < n4; j += 4) {
        float64x2_t c0 = vld1q_f64(crow + j);
        float64x2_t c1 = vld1q_f64(crow + j + 2);
        c0 = vaddq_f64(c0, vmulq_f64(vav, vld1q_f64(brow + j)));
        c1 = vaddq_f64(c1, vmulq_f64(vav, vld1q_f64(brow + j + 2)));
        vst1q_f64(crow + j, c0);
        vst1q_f64(crow + j + 2, c1);
      }
      for (; j < n; ++j) crow[j] += av * brow[j];
    }
  }
}

void add_neon(double* dst, const double* a, const double* b, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    vst1q_f64(dst + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void mul_neon(double* dst, const double* a, const double* b, std::size_t n) {
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void axpy_neon(double* y, double alpha, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vaddq_f64(vy, vmulq_f64(va, vld1q_f64(x + i)));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_neon(double* dst, double alpha, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  const std::size_t n2 = n & ~std::size_t{1};
  std::size_t i = 0;
  for (; i < n2; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) dst[i] = alpha * x[i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);  // partials 0, 1
  float64x2_t acc23 = vdupq_n_f64(0.0);  // partials 2, 3
  const std::size_t n4 = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc23 =
        vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double p[4];
  vst1q_f64(p, acc01);
  vst1q_f64(p + 2, acc23);
  for (; i < n; ++i) p[i & 3] += a[i] * b[i];
  return (p[0] + p[1]) + (p[2] + p[3]);
}

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc01 = vdupq_n_f64(0.0);
  float64x2_t acc23 = vdupq_n_f64(0.0);
  const std::size_t n4 = n & ~std::size_t{3};
  std::size_t i = 0;
  for (; i < n4; i += 4) {
    acc01 = vaddq_f64(acc01, vld1q_f64(x + i));
    acc23 = vaddq_f64(acc23, vld1q_f64(x + i + 2));
  }
  double p[4];
  vst1q_f64(p, acc01);
  vst1q_f64(p + 2, acc23);
  for (; i < n; ++i) p[i & 3] += x[i];
  return (p[0] + p[1]) + (p[2] + p[3]);
}

}  // namespace

const Backend& neon_backend() {
  static const Backend backend{
      "neon",    matmul_neon, add_neon, mul_neon,
      axpy_neon, scale_neon,  dot_neon, sum_neon,
  };
  return backend;
}

}  // namespace vulnscan::kernels

#endif  // aarch64
