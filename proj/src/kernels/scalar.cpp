#include "variants.hpp"

namespace qswitch::kernels::scalar {

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = cplx{};
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

}  // namespace qswitch::kernels::scalar
