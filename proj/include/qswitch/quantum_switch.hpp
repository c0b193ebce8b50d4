#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qswitch/complex_matrix.hpp"
#include "qswitch/density_matrix.hpp"

namespace qswitch {

// A channel in operator-sum form, rho -> sum_i K_i rho K_i^dagger.
struct QuantumChannel {
  std::vector<ComplexMatrix> kraus;
  std::string label;

  // Throws std::invalid_argument when the set is empty, the dimensions
  // differ, or sum K^dagger K deviates from I by more than tol::kCompleteness.
  QuantumChannel(std::vector<ComplexMatrix> kraus_ops, std::string name = {});

  static QuantumChannel unitary(ComplexMatrix u, std::string name = {});
  static QuantumChannel identity(std::size_t dim, std::string name = "identity");

  std::size_t dim() const { return kraus.front().dim(); }
};

// max |sum_i K_i^dagger K_i - I|
double completeness_residual(std::span<const ComplexMatrix> kraus);

// A channel family indexed by duration, e.g. t -> {exp(-i H t)}.
using TimedChannel = std::function<QuantumChannel(double duration)>;

// The two-order switch on (control (x) target), control as tensor factor 0:
//   V_ij = |1><1| (x) M_i N_j + |0><0| (x) N_j M_i,
// i.e. control |0> runs M first and N second, control |1> the reverse.
std::vector<ComplexMatrix> build_switch_kraus(const QuantumChannel& m, const QuantumChannel& n);

// Same construction for duration-parameterized channels over a total time t:
// both input channels are evaluated at t/2.
std::vector<ComplexMatrix> build_switch_kraus(const TimedChannel& m, const TimedChannel& n, double t);

// sum_ij V_ij (rho_c (x) rho_target) V_ij^dagger. Throws std::invalid_argument
// on a dimension mismatch or a completeness residual above
// tol::kCompletenessReject.
DensityMatrix apply_switch(const DensityMatrix& rho_c, const DensityMatrix& rho_target,
                           std::span<const ComplexMatrix> v_set);

// Same, for an already assembled control (x) target state.
DensityMatrix apply_switch(const DensityMatrix& rho_joint, std::span<const ComplexMatrix> v_set);

enum class Sign { plus, minus };

std::string_view to_string(Sign s);

// Orthonormal control measurement basis; defaults to {|+>, |->}.
struct MeasurementBasis {
  Ket plus = ket_plus();
  Ket minus = ket_minus();

  const Ket& outcome(Sign s) const { return s == Sign::plus ? plus : minus; }
};

struct SwitchOutcome {
  Sign sign;
  double probability;
  DensityMatrix reduced_state;  // target register, unit trace
};

// Tr_C[(|s><s| (x) I) rho (|s><s| (x) I)] for control qubit 0: the
// unnormalized target state for outcome s. Its trace is the outcome
// probability.
ComplexMatrix unnormalized_branch(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis = {});

double branch_probability(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis = {});

// Throws EmptyBranchError when the probability is below tol::kEmptyBranch.
SwitchOutcome postselect(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis = {});

}  // namespace qswitch
