#include "qswitch/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qswitch/kernels.hpp"

namespace qswitch {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(data_.size()));
  }
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t n = rows.size();
  std::vector<cplx> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("ComplexMatrix::from_rows: matrix is not square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::norm(data_[i] - other.data_[i]));
  return std::sqrt(worst);
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& z : data_) worst = std::max(worst, std::norm(z));
  return std::sqrt(worst);
}

double ComplexMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::norm((*this)(i, j) - std::conj((*this)(j, i))));
  return std::sqrt(worst);
}

double ComplexMatrix::unitarity_error() const {
  return (adjoint() * (*this)).max_abs_diff(identity(dim_));
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(cplx alpha, const ComplexMatrix& x) {
  require_same_dim(*this, x, "add_scaled");
  kernels::axpy(data_.size(), alpha, x.data(), data());
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "operator*");
  ComplexMatrix c(a.dim());
  kernels::gemm(a.dim(), a.data(), b.data(), c.data());
  return c;
}

ComplexMatrix mul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b.adjoint(); }

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) { return mul_adjoint(u * m, u); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix pauli_y() { return ComplexMatrix::from_rows({{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}); }

ComplexMatrix pauli_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

Ket basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis_ket: index " + std::to_string(index) + " >= dim");
  Ket k(dim);
  k[index] = 1.0;
  return k;
}

Ket ket_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, s};
}

Ket ket_minus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, -s};
}

double norm(std::span<const cplx> v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

cplx inner(std::span<const cplx> bra, std::span<const cplx> ket) {
  if (bra.size() != ket.size()) throw std::invalid_argument("inner: dimension mismatch");
  cplx acc{};
  for (std::size_t i = 0; i < bra.size(); ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

Ket apply(const ComplexMatrix& m, std::span<const cplx> v) {
  if (m.dim() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  Ket out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cplx acc{};
    for (std::size_t j = 0; j < m.dim(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Ket kron(std::span<const cplx> a, std::span<const cplx> b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix outer(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("outer: dimension mismatch");
  ComplexMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

}  // namespace qswitch
