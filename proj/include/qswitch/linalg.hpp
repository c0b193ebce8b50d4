#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qswitch/complex_matrix.hpp"
#include "qswitch/density_matrix.hpp"

namespace qswitch {

// Tensor product with `a` as the major (leftmost) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace of an n-qubit matrix, keeping the listed qubits (in
// ascending order, whatever order they are given in). `keep` must be a
// nonempty proper subset of {0, ..., n-1}.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);

// |v><v| for a unit vector. Throws std::invalid_argument if ||v|| deviates
// from 1 by more than tol::kKetNorm.
ComplexMatrix projector(std::span<const cplx> v);

// Eigen-decomposition of a Hermitian matrix, h = V diag(w) V^dagger, kept so
// that exp(-i s h) can be evaluated for many s at the cost of one product.
class SpectralPropagator {
 public:
  // Throws std::invalid_argument if h is not Hermitian within tol::kExpmInput.
  explicit SpectralPropagator(const ComplexMatrix& h);

  // exp(-i * scale * h)
  ComplexMatrix at(double scale) const;

  std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }

 private:
  std::vector<double> eigenvalues_;  // ascending
  ComplexMatrix eigenvectors_;       // columns
  ComplexMatrix eigenvectors_adj_;
};

// exp(-i * scale * h) for Hermitian h, via the spectral decomposition.
ComplexMatrix hermitian_expm(const ComplexMatrix& h, double scale);

// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Eigenvalues of a general complex matrix, unordered.
std::vector<cplx> general_eigenvalues(const ComplexMatrix& m);

// Singular values (descending) of the realigned operator of a bipartite
// operator on C^dim_a (x) C^dim_b. The operator is a product A (x) B exactly
// when only the first value is nonzero.
std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& op, std::size_t dim_a, std::size_t dim_b);

}  // namespace qswitch
