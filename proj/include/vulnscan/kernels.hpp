#pragma once

#include <cstddef>

namespace vulnscan::kernels {

// Double-precision inner loops behind the tensor ops. Every backend runs
// the same arithmetic in the same order, without fused multiply-add, so
// results are bit-identical across backends. Reductions (dot, sum)
// accumulate four interleaved partials p[i % 4] and combine them as
// (p0 + p1) + (p2 + p3); the lane-parallel SIMD variants reproduce that
// exact order.
struct Backend {
  const char* name;

  // c[m*n] = a[m*k] * b[k*n], all row-major, c may not alias a or b.
  void (*matmul)(double* c, const double* a, const double* b,
                 std::size_t m, std::size_t k, std::size_t n);
  // dst = a + b / dst = a * b, elementwise; dst may alias a or b.
  void (*add)(double* dst, const double* a, const double* b, std::size_t n);
  void (*mul)(double* dst, const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
  // dst = alpha * x
  void (*scale)(double* dst, double alpha, const double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
};

const Backend& scalar_backend();

// Compiled in and usable on this CPU.
bool avx2_available();
bool neon_available();

#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
const Backend& neon_backend();
#endif

// Selected once per process. VULNSCAN_KERNELS=scalar|avx2|neon|auto overrides
// the automatic choice; an unusable or unknown value falls back to auto with
// a warning on stderr.
const Backend& active();

}  // namespace vulnscan::kernels
