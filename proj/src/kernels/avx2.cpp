// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPU feature check.

#include <immintrin.h>

#include "variants.hpp"

namespace qswitch::kernels::avx2 {

namespace {

// Lanes hold interleaved (re, im) pairs, two complex values per __m256d.
inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }
inline __m128d swap_re_im(__m128d v) { return _mm_permute_pd(v, 0b01); }

}  // namespace

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const auto* bd = reinterpret_cast<const double*>(b);
  auto* cd = reinterpret_cast<double*>(c);

  for (std::size_t i = 0; i < n; ++i) {
    const cplx* arow = a + i * n;
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
      __m256d acc_re = _mm256_setzero_pd();  // sum a.re * (b.re, b.im)
      __m256d acc_im = _mm256_setzero_pd();  // sum a.im * (b.im, b.re)
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d bv = _mm256_loadu_pd(bd + 2 * (k * n + j));
        acc_re = _mm256_fmadd_pd(_mm256_set1_pd(arow[k].real()), bv, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_set1_pd(arow[k].imag()), swap_re_im(bv), acc_im);
      }
      _mm256_storeu_pd(cd + 2 * (i * n + j), _mm256_addsub_pd(acc_re, acc_im));
    }
    if (j < n) {
      __m128d acc_re = _mm_setzero_pd();
      __m128d acc_im = _mm_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m128d bv = _mm_loadu_pd(bd + 2 * (k * n + j));
        acc_re = _mm_fmadd_pd(_mm_set1_pd(arow[k].real()), bv, acc_re);
        acc_im = _mm_fmadd_pd(_mm_set1_pd(arow[k].imag()), swap_re_im(bv), acc_im);
      }
      _mm_storeu_pd(cd + 2 * (i * n + j), _mm_addsub_pd(acc_re, acc_im));
    }
  }
}

void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y) {
  const auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());

  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d prod = _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, swap_re_im(xv)));
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  if (i < len) {
    const __m128d xv = _mm_loadu_pd(xd + 2 * i);
    const __m128d prod = _mm_fmaddsub_pd(_mm256_castpd256_pd128(are), xv,
                                         _mm_mul_pd(_mm256_castpd256_pd128(aim), swap_re_im(xv)));
    _mm_storeu_pd(yd + 2 * i, _mm_add_pd(_mm_loadu_pd(yd + 2 * i), prod));
  }
}

}  // namespace qswitch::kernels::avx2
