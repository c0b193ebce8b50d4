#pragma once

// Dense complex inner loops with a scalar reference implementation and SIMD
// variants (AVX2+FMA on x86-64, NEON on AArch64). The variant is picked once
// at startup from the running CPU; tests may force a backend.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qswitch::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);

// Backends compiled into this build and supported by the running CPU.
std::vector<Backend> available_backends();

Backend active_backend();

// Throws std::invalid_argument if `b` is not available.
void set_backend(Backend b);

// c = a * b for row-major n x n matrices. `c` must not alias `a` or `b`.
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);

// y += alpha * x over `len` entries.
void axpy(std::size_t len, cplx alpha, const cplx* x, cplx* y);

}  // namespace qswitch::kernels
