#include "qswitch/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "qswitch/errors.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

double ProtocolParams::ratio() const {
  if (chi_nb == 0.0) throw std::domain_error("ProtocolParams: ratio undefined for chi_nb = 0");
  return chi_ma / chi_nb;
}

double ProtocolParams::scaled_coupling() const {
  if (omega_z == 0.0) throw std::domain_error("ProtocolParams: scaled coupling undefined for omega_z = 0");
  return chi_nb / omega_z;
}

double ProtocolParams::theta() const { return std::sqrt(omega_z * omega_z + chi_ma * chi_ma) / 2.0; }

ProtocolParams ProtocolParams::from_ratio(double r, double k, double omega_z, double t) {
  ProtocolParams p;
  p.omega_z = omega_z;
  p.chi_nb = k * omega_z;
  p.chi_ma = r * p.chi_nb;
  p.t = t;
  return p;
}

ComplexMatrix joint_hamiltonian(double omega_z) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix h = pauli_z() * cplx{omega_z};
  return kron(h, id) + kron(id, h);
}

ComplexMatrix local_drive(double chi_a, double chi_b) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return kron(pauli_x() * cplx{chi_a}, id) + kron(id, pauli_x() * cplx{chi_b});
}

std::pair<ComplexMatrix, ComplexMatrix> aux_hamiltonians(double chi_ma, double chi_nb) {
  return {local_drive(chi_ma, 0.0), local_drive(0.0, chi_nb)};
}

namespace {

ComplexMatrix generator_m(const ProtocolParams& p) { return joint_hamiltonian(p.omega_z) + local_drive(p.chi_ma, p.chi_mb); }
ComplexMatrix generator_n(const ProtocolParams& p) { return joint_hamiltonian(p.omega_z) + local_drive(0.0, p.chi_nb); }

}  // namespace

ComplexMatrix kraus_m(const ProtocolParams& p, double duration) { return hermitian_expm(generator_m(p), duration); }
ComplexMatrix kraus_n(const ProtocolParams& p, double duration) { return hermitian_expm(generator_n(p), duration); }

TimedChannel channel_m(const ProtocolParams& p) {
  return [prop = SpectralPropagator(generator_m(p))](double duration) {
    return QuantumChannel::unitary(prop.at(duration), "M");
  };
}

TimedChannel channel_n(const ProtocolParams& p) {
  return [prop = SpectralPropagator(generator_n(p))](double duration) {
    return QuantumChannel::unitary(prop.at(duration), "N");
  };
}

std::string_view to_string(GForm f) { return f == GForm::as_printed ? "as-printed" : "corrected"; }

double g_closed_form(double chi_ma, double omega_z, double t, GForm form) {
  const double theta = std::sqrt(omega_z * omega_z + chi_ma * chi_ma) / 2.0;
  if (theta == 0.0) return 0.0;
  const double chi2 = chi_ma * chi_ma;
  const double s = std::sin(theta * t);
  const double bracket = (2.0 * omega_z * omega_z + chi2 / 2.0) * s + (chi2 / 2.0) * std::sin(3.0 * theta * t);
  const double theta4 = theta * theta * theta * theta;
  if (form == GForm::as_printed) {
    const double sw = std::sin(omega_z * t);
    return chi2 * sw * sw * s * bracket / theta4;
  }
  const double sw = std::sin(omega_z * t / 2.0);
  return chi2 * sw * sw * s * bracket / (16.0 * theta4);
}

DensityMatrix control_plus_state() { return DensityMatrix::from_pure(ket_plus()); }

ProtocolEvaluator::ProtocolEvaluator(const ProtocolParams& params, DensityMatrix initial)
    : params_(params),
      initial_(std::move(initial)),
      joint_(DensityMatrix::trusted(kron(control_plus_state().matrix(), initial_.matrix()))),
      prop_m_(generator_m(params)),
      prop_n_(generator_n(params)) {
  if (initial_.dim() != 4) throw std::invalid_argument("ProtocolEvaluator: initial state must be a two-qubit state");
}

DensityMatrix ProtocolEvaluator::evolve(double t) const {
  const auto m = QuantumChannel::unitary(prop_m_.at(t / 2.0), "M");
  const auto n = QuantumChannel::unitary(prop_n_.at(t / 2.0), "N");
  return apply_switch(joint_, build_switch_kraus(m, n));
}

ComplexMatrix ProtocolEvaluator::branch(double t, Sign sign) const {
  // Single-unitary processes: <s|V|+> = (NM +- MN)/sqrt(2) on the target.
  const ComplexMatrix m = prop_m_.at(t / 2.0);
  const ComplexMatrix n = prop_n_.at(t / 2.0);
  ComplexMatrix w = n * m;
  w.add_scaled(sign == Sign::plus ? cplx{1.0} : cplx{-1.0}, m * n);
  ComplexMatrix out = conjugate_by(w, initial_.matrix());
  out *= cplx{0.25};
  return out;
}

double ProtocolEvaluator::probability(double t, Sign sign) const { return branch(t, sign).trace().real(); }

SwitchOutcome ProtocolEvaluator::outcome(double t, Sign sign) const { return postselect(evolve(t), sign); }

SwitchOutcome run_protocol(const ProtocolParams& params, Sign sign, const DensityMatrix& initial) {
  const auto rho = apply_switch(control_plus_state(), initial,
                                build_switch_kraus(channel_m(params), channel_n(params), params.t));
  return postselect(rho, sign);
}

double Eq4Report::max_deviation() const {
  return std::max({diagonal_deviation, coherence_deviation, zero_entries_deviation});
}

Eq4Report verify_eq4_structure(const ProtocolParams& params) {
  const double r = params.ratio();
  if (std::abs(r * r - 1.0) > 1e-12) {
    throw std::invalid_argument(fmt::format("verify_eq4_structure: requires R^2 = 1, got R = {:.17g}", r));
  }
  if (params.chi_mb != 0.0) throw std::invalid_argument("verify_eq4_structure: process M must drive qubit A only");

  Eq4Report rep;
  rep.ratio = r;
  rep.branch = ProtocolEvaluator(params).branch(params.t, Sign::minus);
  rep.g = rep.branch.trace().real();

  const cplx half_g{rep.g / 2.0};
  const cplx coh = -r * half_g;
  rep.diagonal_deviation = std::max(std::abs(rep.branch(1, 1) - half_g), std::abs(rep.branch(2, 2) - half_g));
  rep.coherence_deviation = std::max(std::abs(rep.branch(1, 2) - coh), std::abs(rep.branch(2, 1) - coh));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool in_block = (i == 1 || i == 2) && (j == 1 || j == 2);
      if (!in_block) rep.zero_entries_deviation = std::max(rep.zero_entries_deviation, std::abs(rep.branch(i, j)));
    }
  return rep;
}

}  // namespace qswitch
