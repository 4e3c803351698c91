#include "vulnscan/kernels.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace vulnscan::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

bool neon_available() {
#if defined(__aarch64__) || defined(_M_ARM64)
  return true;  // baseline on aarch64
#else
  return false;
#endif
}

namespace {

const Backend& pick_auto() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return avx2_backend();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
  return neon_backend();
#endif
  return scalar_backend();
}

const Backend& pick() {
  const char* env = std::getenv("VULNSCAN_KERNELS");
  if (env == nullptr || std::strcmp(env, "") == 0 ||
      std::strcmp(env, "auto") == 0) {
    return pick_auto();
  }
  if (std::strcmp(env, "scalar") == 0) return scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
  if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_backend();
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
  if (std::strcmp(env, "neon") == 0) return neon_backend();
#endif
  std::fprintf(stderr,
               "vulnscan: VULNSCAN_KERNELS=%s not usable here, using auto\n",
               env);
  return pick_auto();
}

}  // namespace

const Backend& active() {
  static const Backend& chosen = pick();
  return chosen;
}

}  // namespace vulnscan::kernels
