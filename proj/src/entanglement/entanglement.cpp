#include "qswitch/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "qswitch/linalg.hpp"
#include "qswitch/tolerances.hpp"

namespace qswitch {

namespace {

using Mat4 = Eigen::Matrix<cplx, 4, 4, Eigen::RowMajor>;

// sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
Mat4 spin_flip() {
  Mat4 yy = Mat4::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  return yy;
}

}  // namespace

// lambdas are the squared singular values of tau = W^T (sy x sy) W, where
// rho = W W^dagger; same spectrum as rho (sy x sy) conj(rho) (sy x sy).
ConcurrenceResult concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument(fmt::format("concurrence: expected a two-qubit state, got dim {}", rho.dim()));
  if (std::abs(rho.trace() - 1.0) > tol::kTrace) {
    throw std::invalid_argument(fmt::format("concurrence: state is not normalized (trace {:.17g})", rho.trace()));
  }

  const Mat4 m = Eigen::Map<const Mat4>(rho.matrix().data());
  const Eigen::SelfAdjointEigenSolver<Mat4> eig(m);
  if (eig.info() != Eigen::Success) throw std::runtime_error("concurrence: eigendecomposition failed");
  Mat4 w = eig.eigenvectors();
  for (int j = 0; j < 4; ++j) w.col(j) *= std::sqrt(std::max(eig.eigenvalues()(j), 0.0));
  const Mat4 tau = w.transpose() * spin_flip() * w;
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Mat4>(tau).singularValues();  // descending

  ConcurrenceResult out;
  for (int i = 0; i < 4; ++i) out.lambdas[i] = sv(i) * sv(i);
  const double c = std::sqrt(out.lambdas[0]) - std::sqrt(out.lambdas[1]) - std::sqrt(out.lambdas[2]) -
                   std::sqrt(out.lambdas[3]);
  out.value = std::max(c, 0.0);
  return out;
}

Ket bell_ket(BellState b) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (b) {
    case BellState::phi_plus:
      return {s, 0.0, 0.0, s};
    case BellState::phi_minus:
      return {s, 0.0, 0.0, -s};
    case BellState::psi_plus:
      return {0.0, s, s, 0.0};
    case BellState::psi_minus:
      return {0.0, s, -s, 0.0};
  }
  throw std::invalid_argument("bell_ket: unknown Bell state");
}

double bell_fidelity(const DensityMatrix& rho, std::span<const cplx> target) {
  if (target.size() != rho.dim()) throw std::invalid_argument("bell_fidelity: dimension mismatch");
  if (std::abs(norm(target) - 1.0) > tol::kKetNorm) throw std::invalid_argument("bell_fidelity: target is not normalized");
  return inner(target, apply(rho.matrix(), target)).real();
}

}  // namespace qswitch
