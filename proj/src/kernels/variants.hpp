#pragma once

// Per-backend entry points. avx2:: and neon:: are only defined when the
// matching QSWITCH_HAVE_* macro is set for the build.

#include "qswitch/kernels.hpp"

namespace qswitch::kernels {

namespace scalar {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);
}  // namespace scalar

namespace avx2 {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);
}  // namespace avx2

namespace neon {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);
}  // namespace neon

}  // namespace qswitch::kernels
