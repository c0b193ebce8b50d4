#include "qswitch/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "qswitch/linalg.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

std::size_t qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument(fmt::format("dimension {} is not a power of two >= 2", dim));
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

DensityMatrix::DensityMatrix(Unchecked, ComplexMatrix matrix, bool trace_normalized)
    : matrix_(std::move(matrix)), qubit_count_(qubits_for_dim(matrix_.dim())), trace_normalized_(trace_normalized) {}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, bool trace_normalized)
    : DensityMatrix(Unchecked{}, std::move(matrix), trace_normalized) {
  if (auto why = invariant_violation(); !why.empty()) throw std::invalid_argument("DensityMatrix: " + why);
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix, bool trace_normalized) {
  return DensityMatrix(Unchecked{}, std::move(matrix), trace_normalized);
}

DensityMatrix DensityMatrix::from_pure(std::span<const cplx> ket) {
  if (std::abs(norm(ket) - 1.0) > tol::kKetNorm) throw std::invalid_argument("DensityMatrix::from_pure: ket is not normalized");
  return DensityMatrix(Unchecked{}, outer(ket, ket), true);
}

DensityMatrix DensityMatrix::basis_state(std::size_t qubit_count, std::size_t index) {
  return from_pure(basis_ket(std::size_t{1} << qubit_count, index));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t qubit_count) {
  const std::size_t dim = std::size_t{1} << qubit_count;
  return DensityMatrix(Unchecked{}, ComplexMatrix::identity(dim) * cplx{1.0 / static_cast<double>(dim)}, true);
}

std::string DensityMatrix::invariant_violation() const {
  const double herm = matrix_.hermiticity_error();
  if (herm > tol::kHermitian) return fmt::format("not Hermitian (max |A - A^dagger| = {:.3e})", herm);

  const double tr = trace();
  if (trace_normalized_) {
    if (std::abs(tr - 1.0) > tol::kTrace) return fmt::format("trace {:.17g} differs from 1", tr);
  } else if (tr < -tol::kTrace || tr > 1.0 + tol::kTrace) {
    return fmt::format("trace {:.17g} outside [0, 1]", tr);
  }

  const auto evals = hermitian_eigenvalues(matrix_);
  if (!evals.empty() && evals.front() < -tol::kPsdSlack) {
    return fmt::format("not positive semidefinite (min eigenvalue {:.3e})", evals.front());
  }
  return {};
}

DensityMatrix DensityMatrix::normalized() const {
  const double tr = trace();
  if (tr <= 0.0) throw std::domain_error("DensityMatrix::normalized: zero trace");
  return DensityMatrix(Unchecked{}, matrix_ * cplx{1.0 / tr}, true);
}

}  // namespace qswitch
