#pragma once

#include <random>

#include "oracles/oracles.hpp"
#include "qswitch/complex_matrix.hpp"
#include "qswitch/density_matrix.hpp"
#include "qswitch/linalg.hpp"

namespace qswitch::testing {

inline oracle::Mat to_oracle(const ComplexMatrix& m) {
  oracle::Mat o(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) o(i, j) = m(i, j);
  return o;
}

inline ComplexMatrix from_oracle(const oracle::Mat& o) { return ComplexMatrix(o.n, o.a); }

inline double max_diff(const ComplexMatrix& a, const oracle::Mat& b) { return a.max_abs_diff(from_oracle(b)); }

inline cplx gaussian_cplx(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

inline ComplexMatrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = gaussian_cplx(rng);
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(dim, rng);
  ComplexMatrix h = a + a.adjoint();
  h *= cplx{0.5};
  return h;
}

inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  return hermitian_expm(random_hermitian(dim, rng), 1.0);
}

inline Ket random_ket(std::size_t dim, std::mt19937_64& rng) {
  Ket k(dim);
  for (auto& z : k) z = gaussian_cplx(rng);
  const double n = norm(k);
  for (auto& z : k) z /= n;
  return k;
}

// Mixed state G G^dagger / Tr for a Ginibre G.
inline DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_matrix(dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= cplx{1.0 / rho.trace().real()};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  return DensityMatrix(std::move(rho));
}

}  // namespace qswitch::testing
