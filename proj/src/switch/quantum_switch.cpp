#include "qswitch/quantum_switch.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "qswitch/errors.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

double completeness_residual(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) throw std::invalid_argument("completeness_residual: empty Kraus set");
  ComplexMatrix sum(kraus.front().dim());
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return sum.max_abs_diff(ComplexMatrix::identity(sum.dim()));
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus_ops, std::string name)
    : kraus(std::move(kraus_ops)), label(std::move(name)) {
  if (kraus.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus set");
  for (const auto& k : kraus) {
    if (k.dim() != kraus.front().dim()) throw std::invalid_argument("QuantumChannel: Kraus operators differ in dimension");
  }
  const double residual = completeness_residual(kraus);
  if (residual > tol::kCompleteness) {
    throw std::invalid_argument(fmt::format("QuantumChannel '{}': completeness residual {:.3e}", label, residual));
  }
}

QuantumChannel QuantumChannel::unitary(ComplexMatrix u, std::string name) {
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::move(u));
  return QuantumChannel(std::move(ops), std::move(name));
}

QuantumChannel QuantumChannel::identity(std::size_t dim, std::string name) {
  return unitary(ComplexMatrix::identity(dim), std::move(name));
}

std::vector<ComplexMatrix> build_switch_kraus(const QuantumChannel& m, const QuantumChannel& n) {
  if (m.dim() != n.dim()) {
    throw std::invalid_argument(fmt::format("build_switch_kraus: channel dimensions differ ({} vs {})", m.dim(), n.dim()));
  }
  const std::size_t d = m.dim();
  std::vector<ComplexMatrix> out;
  out.reserve(m.kraus.size() * n.kraus.size());
  for (const auto& mi : m.kraus) {
    for (const auto& nj : n.kraus) {
      const ComplexMatrix mn = mi * nj;  // control |1>
      const ComplexMatrix nm = nj * mi;  // control |0>
      ComplexMatrix v(2 * d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          v(r, c) = nm(r, c);
          v(d + r, d + c) = mn(r, c);
        }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<ComplexMatrix> build_switch_kraus(const TimedChannel& m, const TimedChannel& n, double t) {
  return build_switch_kraus(m(t / 2.0), n(t / 2.0));
}

DensityMatrix apply_switch(const DensityMatrix& rho_c, const DensityMatrix& rho_target,
                           std::span<const ComplexMatrix> v_set) {
  return apply_switch(DensityMatrix::trusted(kron(rho_c.matrix(), rho_target.matrix()),
                                             rho_c.trace_normalized() && rho_target.trace_normalized()),
                      v_set);
}

DensityMatrix apply_switch(const DensityMatrix& rho_joint, std::span<const ComplexMatrix> v_set) {
  if (v_set.empty()) throw std::invalid_argument("apply_switch: empty Kraus set");
  const std::size_t dim = rho_joint.dim();
  for (const auto& v : v_set) {
    if (v.dim() != dim) {
      throw std::invalid_argument(fmt::format("apply_switch: Kraus dimension {} does not match state dimension {}", v.dim(), dim));
    }
  }
  const double residual = completeness_residual(v_set);
  if (residual > tol::kCompletenessReject) {
    throw std::invalid_argument(fmt::format("apply_switch: malformed channel (completeness residual {:.3e})", residual));
  }

  ComplexMatrix out(dim);
  for (const auto& v : v_set) out += conjugate_by(v, rho_joint.matrix());
  return DensityMatrix::trusted(std::move(out), rho_joint.trace_normalized());
}

std::string_view to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

ComplexMatrix unnormalized_branch(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis) {
  const Ket& s = basis.outcome(sign);
  if (s.size() != 2) throw std::invalid_argument("unnormalized_branch: control basis vectors must be qubit kets");
  const std::size_t d = rho.dim() / 2;
  if (rho.qubit_count() < 2) throw std::invalid_argument("unnormalized_branch: state must hold a control and a target");

  // <s|_C rho |s>_C with the control as the most significant index bit.
  ComplexMatrix out(d);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t cp = 0; cp < 2; ++cp) {
      const cplx w = std::conj(s[c]) * s[cp];
      if (w == cplx{}) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out(a, b) += w * rho(c * d + a, cp * d + b);
    }
  return out;
}

double branch_probability(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis) {
  return unnormalized_branch(rho, sign, basis).trace().real();
}

SwitchOutcome postselect(const DensityMatrix& rho, Sign sign, const MeasurementBasis& basis) {
  ComplexMatrix branch = unnormalized_branch(rho, sign, basis);
  const double p = branch.trace().real();
  if (!(p >= tol::kEmptyBranch)) {
    throw EmptyBranchError(fmt::format("empty branch: P({}) = {:.3e} is below the {:.0e} threshold", to_string(sign), p,
                                       tol::kEmptyBranch),
                           p);
  }
  branch *= cplx{1.0 / p};
  return SwitchOutcome{sign, p, DensityMatrix::trusted(std::move(branch), true)};
}

}  // namespace qswitch
