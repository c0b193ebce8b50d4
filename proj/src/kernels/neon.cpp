#include <arm_neon.h>

#include "variants.hpp"

namespace qswitch::kernels::neon {

// One complex double per float64x2_t, laid out (re, im).

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const auto* bd = reinterpret_cast<const double*>(b);
  auto* cd = reinterpret_cast<double*>(c);
  const float64x2_t flip = {-1.0, 1.0};

  for (std::size_t i = 0; i < n; ++i) {
    const cplx* arow = a + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      float64x2_t acc_re = vdupq_n_f64(0.0);
      float64x2_t acc_im = vdupq_n_f64(0.0);
      for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t bv = vld1q_f64(bd + 2 * (k * n + j));
        acc_re = vfmaq_n_f64(acc_re, bv, arow[k].real());
        acc_im = vfmaq_n_f64(acc_im, vextq_f64(bv, bv, 1), arow[k].imag());
      }
      vst1q_f64(cd + 2 * (i * n + j), vfmaq_f64(acc_re, acc_im, flip));
    }
  }
}

void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const float64x2_t flip = {-1.0, 1.0};
  for (std::size_t i = 0; i < len; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    float64x2_t yv = vld1q_f64(yd + 2 * i);
    yv = vfmaq_n_f64(yv, xv, alpha.real());
    yv = vfmaq_f64(yv, vmulq_n_f64(vextq_f64(xv, xv, 1), alpha.imag()), flip);
    vst1q_f64(yd + 2 * i, yv);
  }
}

}  // namespace qswitch::kernels::neon
