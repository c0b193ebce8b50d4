#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qswitch {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. The carrier for states,
// Hamiltonians, unitaries and projectors.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // dim x dim zero matrix.
  explicit ComplexMatrix(std::size_t dim);

  // Throws std::invalid_argument unless entries.size() == dim * dim.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t dim) { return ComplexMatrix(dim); }
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  // Nested row literal; every row must have as many entries as there are rows.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  cplx& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const cplx& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }
  const cplx* data() const noexcept { return data_.data(); }
  cplx* data() noexcept { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  cplx trace() const;

  // Largest |a_ij - b_ij|. Throws on dimension mismatch.
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;

  // max |A - A^dagger|.
  double hermiticity_error() const;
  bool is_hermitian(double tol) const { return hermiticity_error() <= tol; }

  // max |A^dagger A - I|.
  double unitarity_error() const;
  bool is_unitary(double tol) const { return unitarity_error() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  // this += alpha * x
  ComplexMatrix& add_scaled(cplx alpha, const ComplexMatrix& x);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

// a * b^dagger
ComplexMatrix mul_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);

// u * m * u^dagger
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);

// ab - ba
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices in the {|0>, |1>} basis with sigma_z = |0><0| - |1><1|.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// State vectors.
using Ket = std::vector<cplx>;

Ket basis_ket(std::size_t dim, std::size_t index);
Ket ket_plus();   // (|0> + |1>)/sqrt(2)
Ket ket_minus();  // (|0> - |1>)/sqrt(2)

double norm(std::span<const cplx> v);
cplx inner(std::span<const cplx> bra, std::span<const cplx> ket);  // <bra|ket>
Ket apply(const ComplexMatrix& m, std::span<const cplx> v);
Ket kron(std::span<const cplx> a, std::span<const cplx> b);

// |a><b|
ComplexMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

}  // namespace qswitch
