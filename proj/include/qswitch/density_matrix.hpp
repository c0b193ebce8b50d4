#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "qswitch/complex_matrix.hpp"

namespace qswitch {

// Qubit ordering: qubit 0 is the leftmost tensor factor, i.e. the most
// significant bit of the basis index. For the switch register this means
// control = 0, A = 1, B = 2.

// A density operator on `qubit_count` qubits. Normalized states have unit
// trace; sub-normalized ones (unnormalized post-selection branches) have
// trace in [0, 1].
class DensityMatrix {
 public:
  // Validates every invariant (Hermitian, PSD, trace) and throws
  // std::invalid_argument with the failing condition.
  DensityMatrix(ComplexMatrix matrix, bool trace_normalized = true);

  // Skips the eigenvalue check. For states produced by CPTP maps from
  // validated inputs, where the invariants hold by construction.
  static DensityMatrix trusted(ComplexMatrix matrix, bool trace_normalized = true);

  static DensityMatrix from_pure(std::span<const cplx> ket);
  static DensityMatrix basis_state(std::size_t qubit_count, std::size_t index);
  static DensityMatrix maximally_mixed(std::size_t qubit_count);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  std::size_t qubit_count() const noexcept { return qubit_count_; }
  bool trace_normalized() const noexcept { return trace_normalized_; }
  double trace() const { return matrix_.trace().real(); }

  const cplx& operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  // Empty string when all invariants hold, otherwise a description of the
  // first violation.
  std::string invariant_violation() const;

  // Copy scaled to unit trace. Throws std::domain_error on zero trace.
  DensityMatrix normalized() const;

 private:
  struct Unchecked {};
  DensityMatrix(Unchecked, ComplexMatrix matrix, bool trace_normalized);

  ComplexMatrix matrix_;
  std::size_t qubit_count_ = 0;
  bool trace_normalized_ = true;
};

// Number of qubits for a power-of-two dimension; throws otherwise.
std::size_t qubits_for_dim(std::size_t dim);

}  // namespace qswitch
