#pragma once

#include <array>
#include <span>

#include "qswitch/complex_matrix.hpp"
#include "qswitch/density_matrix.hpp"

namespace qswitch {

struct ConcurrenceResult {
  double value = 0.0;
  // Eigenvalues of rho (sy x sy) conj(rho) (sy x sy), clipped at zero and
  // sorted descending.
  std::array<double, 4> lambdas{};
};

// Wootters concurrence, max(sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4), 0).
// Requires a unit-trace two-qubit state; throws std::invalid_argument
// otherwise.
ConcurrenceResult concurrence(const DensityMatrix& rho);

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

// (|00> +- |11>)/sqrt(2), (|01> +- |10>)/sqrt(2)
Ket bell_ket(BellState b);

// <target|rho|target>, real part. Throws std::invalid_argument on a
// dimension mismatch or an unnormalized target.
double bell_fidelity(const DensityMatrix& rho, std::span<const cplx> target);

}  // namespace qswitch
