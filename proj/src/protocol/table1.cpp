#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/core.h>

#include "qswitch/entanglement.hpp"
#include "qswitch/protocol.hpp"

namespace qswitch {

namespace {

constexpr double kRatioTolerance = 1e-12;
constexpr double kMinProbability = 1e-6;

bool drives_both_qubits(Table1Label l) { return l == Table1Label::C || l == Table1Label::D; }

}  // namespace

std::string_view to_string(Table1Label l) {
  switch (l) {
    case Table1Label::A:
      return "A";
    case Table1Label::B:
      return "B";
    case Table1Label::C:
      return "C";
    case Table1Label::D:
      return "D";
  }
  return "?";
}

std::array<Table1Row, 4> table1_rows() {
  return {{
      {Table1Label::A, 0, +1.0, bell_ket(BellState::psi_minus), 0.0},
      {Table1Label::B, 0, -1.0, bell_ket(BellState::psi_plus), 0.0},
      {Table1Label::C, 1, -1.0, std::nullopt, -1.0},
      {Table1Label::D, 1, +1.0, std::nullopt, +1.0},
  }};
}

const Table1Row& table1_row(Table1Label l) {
  static const auto rows = table1_rows();
  return rows[static_cast<std::size_t>(l)];
}

ProtocolParams table1_params(const Table1Row& row, double omega_z, double chi, double t,
                             std::optional<double> ratio_override) {
  const double r = ratio_override.value_or(row.ratio_condition);
  if (r == 0.0) throw std::invalid_argument("table1_params: ratio must be nonzero");
  ProtocolParams p;
  p.omega_z = omega_z;
  p.t = t;
  p.chi_ma = chi;
  if (drives_both_qubits(row.label)) {
    p.chi_mb = chi / r;
    p.chi_nb = 0.0;
  } else {
    p.chi_nb = chi / r;
    p.chi_mb = 0.0;
  }
  return p;
}

Table1Report check_table1(const Table1Row& row, const ProtocolParams& params, double tol) {
  Table1Report rep;
  rep.label = row.label;
  const double denom = drives_both_qubits(row.label) ? params.chi_mb : params.chi_nb;
  rep.measured_ratio = denom == 0.0 ? std::numeric_limits<double>::infinity() : params.chi_ma / denom;
  rep.ratio_condition_met = std::abs(rep.measured_ratio - row.ratio_condition) <= kRatioTolerance;

  const auto initial = DensityMatrix::basis_state(2, row.initial_index);
  const ProtocolEvaluator eval(params, initial);
  rep.probability = eval.probability(params.t, Sign::minus);
  if (rep.probability < kMinProbability) {
    throw std::invalid_argument(
        fmt::format("check_table1: P(-) = {:.3e} at t = {} is below {:.0e}", rep.probability, params.t, kMinProbability));
  }
  const SwitchOutcome out = eval.outcome(params.t, Sign::minus);
  const DensityMatrix& rho = out.reduced_state;
  rep.concurrence = concurrence(rho).value;

  bool identity_ok = false;
  if (row.expected_state) {
    rep.fidelity = bell_fidelity(rho, *row.expected_state);
    identity_ok = std::abs(*rep.fidelity - 1.0) <= tol;
  } else {
    rep.leakage = 1.0 - (rho(0, 0).real() + rho(3, 3).real());
    rep.coherence = std::abs(rho(0, 3));
    // rho(3,0) = sign e^{i phi} / 2
    rep.phi = std::arg(row.phase_family_sign * rho(3, 0));
    if (*rep.phi <= -std::numbers::pi) *rep.phi += 2.0 * std::numbers::pi;
    identity_ok = std::abs(*rep.leakage) <= tol && std::abs(*rep.coherence - 0.5) <= tol;
  }

  const bool entangled = rep.concurrence >= 1.0 - tol;
  rep.passed = rep.ratio_condition_met && entangled && identity_ok;
  if (!rep.ratio_condition_met) {
    rep.detail = fmt::format("ratio condition violated: measured {:.17g}, row requires {:+g}", rep.measured_ratio,
                             row.ratio_condition);
  } else if (!entangled) {
    rep.detail = fmt::format("concurrence {:.17g} below 1 - {:.0e}", rep.concurrence, tol);
  } else if (!identity_ok) {
    rep.detail = "reduced state does not match the row's Bell family";
  }
  return rep;
}

}  // namespace qswitch
