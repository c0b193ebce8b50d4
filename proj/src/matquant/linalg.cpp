#include "qswitch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <fmt/core.h>

#include "qswitch/tolerances.hpp"

namespace qswitch {

namespace {

using EigenMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  return Eigen::Map<const EigenMatrix>(m.data(), n, n);
}

ComplexMatrix from_eigen(const EigenMatrix& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()));
  Eigen::Map<EigenMatrix>(m.data(), e.rows(), e.cols()) = e;
  return m;
}

// Scatter the bits of `sub` into the index positions of `qubits` (qubit q is
// bit n-1-q of an n-qubit index).
std::size_t scatter_bits(std::size_t sub, std::span<const std::size_t> qubits, std::size_t n) {
  std::size_t full = 0;
  const std::size_t k = qubits.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t bit = (sub >> (k - 1 - i)) & 1u;
    full |= bit << (n - 1 - qubits[i]);
  }
  return full;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> keep) {
  const std::size_t n = qubits_for_dim(m.dim());
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty() || kept.size() >= n || kept.back() >= n) {
    throw std::invalid_argument(fmt::format("partial_trace: keep set must be a nonempty proper subset of {} qubits", n));
  }
  if (kept.size() != keep.size()) throw std::invalid_argument("partial_trace: duplicate qubit in keep set");

  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  const std::size_t out_dim = std::size_t{1} << kept.size();
  const std::size_t env_dim = std::size_t{1} << traced.size();
  std::vector<std::size_t> env_offsets(env_dim);
  for (std::size_t e = 0; e < env_dim; ++e) env_offsets[e] = scatter_bits(e, traced, n);

  ComplexMatrix out(out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    const std::size_t row_base = scatter_bits(r, kept, n);
    for (std::size_t c = 0; c < out_dim; ++c) {
      const std::size_t col_base = scatter_bits(c, kept, n);
      cplx acc{};
      for (std::size_t e : env_offsets) acc += m(row_base | e, col_base | e);
      out(r, c) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  return DensityMatrix::trusted(partial_trace(rho.matrix(), keep), rho.trace_normalized());
}

ComplexMatrix projector(std::span<const cplx> v) {
  const double nv = norm(v);
  if (std::abs(nv - 1.0) > tol::kKetNorm) {
    throw std::invalid_argument(fmt::format("projector: vector norm {:.17g} is not 1", nv));
  }
  return outer(v, v);
}

SpectralPropagator::SpectralPropagator(const ComplexMatrix& h) {
  const double herm = h.hermiticity_error();
  if (herm > tol::kExpmInput) {
    throw std::invalid_argument(fmt::format("hermitian_expm: generator is not Hermitian (violation {:.3e})", herm));
  }
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(as_eigen(h));
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_expm: eigendecomposition failed");
  const auto& w = solver.eigenvalues();
  eigenvalues_.assign(w.data(), w.data() + w.size());
  eigenvectors_ = from_eigen(solver.eigenvectors());
  eigenvectors_adj_ = eigenvectors_.adjoint();
}

ComplexMatrix SpectralPropagator::at(double scale) const {
  const std::size_t n = eigenvalues_.size();
  ComplexMatrix scaled = eigenvectors_;
  for (std::size_t j = 0; j < n; ++j) {
    const double phase = -scale * eigenvalues_[j];
    const cplx f{std::cos(phase), std::sin(phase)};
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= f;
  }
  return scaled * eigenvectors_adj_;
}

ComplexMatrix hermitian_expm(const ComplexMatrix& h, double scale) { return SpectralPropagator(h).at(scale); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(as_eigen(h), Eigen::EigenvaluesOnly);
  const auto& w = solver.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

std::vector<cplx> general_eigenvalues(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<EigenMatrix> solver(as_eigen(m), false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("general_eigenvalues: solver did not converge");
  const auto& w = solver.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

std::vector<double> operator_schmidt_coefficients(const ComplexMatrix& op, std::size_t dim_a, std::size_t dim_b) {
  if (op.dim() != dim_a * dim_b) throw std::invalid_argument("operator_schmidt_coefficients: dimension mismatch");
  // Realignment: R[(i k), (j l)] = op[(i j), (k l)] with i,k on A and j,l on B.
  const auto ra = static_cast<Eigen::Index>(dim_a * dim_a);
  const auto rb = static_cast<Eigen::Index>(dim_b * dim_b);
  EigenMatrix realigned(ra, rb);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t k = 0; k < dim_a; ++k)
      for (std::size_t j = 0; j < dim_b; ++j)
        for (std::size_t l = 0; l < dim_b; ++l)
          realigned(static_cast<Eigen::Index>(i * dim_a + k), static_cast<Eigen::Index>(j * dim_b + l)) =
              op(i * dim_b + j, k * dim_b + l);
  Eigen::JacobiSVD<EigenMatrix> svd(realigned);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace qswitch
