#pragma once

// Numerical tolerances shared by every module and by the test suites.

namespace qswitch::tol {

// Default entrywise equality tolerance.
inline constexpr double kEquality = 1e-10;

// Hermiticity check for density matrices and flagged-Hermitian operators.
inline constexpr double kHermitian = 1e-12;

// Largest symmetry violation accepted as input to the matrix exponential.
inline constexpr double kExpmInput = 1e-10;

// ||U^dagger U - I||_max bound for unitaries.
inline constexpr double kUnitary = 1e-10;

// Smallest eigenvalue accepted for a density matrix.
inline constexpr double kPsdSlack = 1e-10;

// |Tr(rho) - 1| bound for normalized states.
inline constexpr double kTrace = 1e-10;

// Kraus completeness residual on construction and on use by the switch.
inline constexpr double kCompleteness = 1e-10;
inline constexpr double kCompletenessReject = 1e-8;

// Norm tolerance for kets handed to projector().
inline constexpr double kKetNorm = 1e-12;

// Post-selected branches with probability below this are empty.
inline constexpr double kEmptyBranch = 1e-12;

}  // namespace qswitch::tol
