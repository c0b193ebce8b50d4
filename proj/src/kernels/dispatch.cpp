#include <atomic>
#include <stdexcept>
#include <string>

#include "variants.hpp"

namespace qswitch::kernels {

namespace {

bool cpu_supports(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(QSWITCH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(QSWITCH_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

Backend detect() {
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
    if (cpu_supports(b)) out.push_back(b);
  }
  return out;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!cpu_supports(b)) {
    throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  switch (active_backend()) {
#if defined(QSWITCH_HAVE_AVX2)
    case Backend::avx2:
      return avx2::gemm(n, a, b, c);
#endif
#if defined(QSWITCH_HAVE_NEON)
    case Backend::neon:
      return neon::gemm(n, a, b, c);
#endif
    default:
      return scalar::gemm(n, a, b, c);
  }
}

void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
  switch (active_backend()) {
#if defined(QSWITCH_HAVE_AVX2)
    case Backend::avx2:
      return avx2::axpy(len, alpha, x, y);
#endif
#if defined(QSWITCH_HAVE_NEON)
    case Backend::neon:
      return neon::axpy(len, alpha, x, y);
#endif
    default:
      return scalar::axpy(len, alpha, x, y);
  }
}

}  // namespace qswitch::kernels
