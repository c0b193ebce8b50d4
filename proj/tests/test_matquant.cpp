#include <gtest/gtest.h>

#include <random>

#include "qswitch/complex_matrix.hpp"
#include "qswitch/density_matrix.hpp"
#include "qswitch/linalg.hpp"
#include "qswitch/tolerances.hpp"
#include "test_util.hpp"

namespace qswitch {
namespace {

using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;

TEST(ComplexMatrix, FromRowsRejectsRagged) {
  EXPECT_THROW(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(2, std::vector<cplx>(3)), std::invalid_argument);
}

TEST(ComplexMatrix, ProductDimensionMismatchThrows) {
  EXPECT_THROW(ComplexMatrix(2) * ComplexMatrix(4), std::invalid_argument);
}

TEST(ComplexMatrix, PauliAlgebra) {
  const cplx i{0.0, 1.0};
  EXPECT_LE((pauli_x() * pauli_y()).max_abs_diff(i * pauli_z()), 1e-15);
  EXPECT_LE((pauli_x() * pauli_x()).max_abs_diff(ComplexMatrix::identity(2)), 1e-15);
  EXPECT_TRUE(pauli_y().is_hermitian(1e-12));
  EXPECT_TRUE(pauli_y().is_unitary(1e-12));
}

TEST(ComplexMatrix, AdjointOfProduct) {
  std::mt19937_64 rng(3);
  const auto a = random_matrix(4, rng);
  const auto b = random_matrix(4, rng);
  EXPECT_LE((a * b).adjoint().max_abs_diff(b.adjoint() * a.adjoint()), 1e-12);
}

TEST(Kron, PauliExample) {
  const ComplexMatrix zx = kron(pauli_z(), pauli_x());
  const ComplexMatrix expected = ComplexMatrix::from_rows(
      {{0.0, 1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, -1.0}, {0.0, 0.0, -1.0, 0.0}});
  EXPECT_EQ(zx, expected);
}

TEST(Kron, LeftFactorIsMostSignificant) {
  // |1> (x) |0> = |10>, index 2
  const Ket k = kron(basis_ket(2, 1), basis_ket(2, 0));
  EXPECT_EQ(k, basis_ket(4, 2));
}

TEST(Kron, MixedProductProperty) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_matrix(2, rng), b = random_matrix(4, rng);
    const auto c = random_matrix(2, rng), d = random_matrix(4, rng);
    EXPECT_LE((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)), 1e-12);
  }
}

TEST(Kron, MatchesOracle) {
  std::mt19937_64 rng(6);
  const auto a = random_matrix(2, rng), b = random_matrix(4, rng);
  EXPECT_LE(testing::max_diff(kron(a, b), oracle::kron(testing::to_oracle(a), testing::to_oracle(b))), 0.0);
}

TEST(PartialTrace, ProductStateFactors) {
  const Ket a = ket_plus();
  const Ket b = basis_ket(4, 3);
  const auto rho = DensityMatrix::from_pure(kron(a, b));
  const std::size_t keep0[] = {0};
  const std::size_t keep12[] = {1, 2};
  EXPECT_LE(partial_trace(rho, keep0).matrix().max_abs_diff(outer(a, a)), 1e-15);
  EXPECT_LE(partial_trace(rho, keep12).matrix().max_abs_diff(outer(b, b)), 1e-15);
}

TEST(PartialTrace, BellPairIsMaximallyMixed) {
  const double s = 1.0 / std::sqrt(2.0);
  const Ket bell = {s, 0.0, 0.0, s};
  const std::size_t keep[] = {1};
  const auto red = partial_trace(DensityMatrix::from_pure(bell), keep);
  EXPECT_LE(red.matrix().max_abs_diff(DensityMatrix::maximally_mixed(1).matrix()), 1e-15);
}

TEST(PartialTrace, KeepOrderIsIrrelevant) {
  std::mt19937_64 rng(8);
  const auto rho = random_density(8, rng);
  const std::size_t a[] = {0, 2};
  const std::size_t b[] = {2, 0};
  EXPECT_EQ(partial_trace(rho.matrix(), a), partial_trace(rho.matrix(), b));
}

TEST(PartialTrace, InvalidKeepSetsRejected) {
  const auto rho = DensityMatrix::maximally_mixed(3);
  const std::size_t all[] = {0, 1, 2};
  const std::size_t dup[] = {1, 1};
  const std::size_t out_of_range[] = {3};
  EXPECT_THROW(partial_trace(rho, std::span<const std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, all), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, dup), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, out_of_range), std::invalid_argument);
}

TEST(PartialTrace, MatchesDirectSummationAndComposes) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    const auto rho = random_density(8, rng);
    const auto o = testing::to_oracle(rho.matrix());
    for (unsigned mask = 1; mask < 7; ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t q = 0; q < 3; ++q)
        if ((mask >> q) & 1u) keep.push_back(q);
      EXPECT_LE(testing::max_diff(partial_trace(rho.matrix(), keep), oracle::partial_trace(o, 3, mask)), 1e-14);
    }
    // Tr_2 then Tr_1 equals keeping qubit 0 directly.
    const std::size_t k01[] = {0, 1};
    const std::size_t k0[] = {0};
    EXPECT_LE(partial_trace(partial_trace(rho.matrix(), k01), k0).max_abs_diff(partial_trace(rho.matrix(), k0)), 1e-14);
  }
}

TEST(Projector, RankOneIdempotent) {
  std::mt19937_64 rng(10);
  const Ket v = testing::random_ket(4, rng);
  const auto p = projector(v);
  EXPECT_LE((p * p).max_abs_diff(p), 1e-12);
  EXPECT_LE(p.hermiticity_error(), 1e-12);
  EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
}

TEST(Projector, UnnormalizedRejected) {
  EXPECT_THROW(projector(Ket{1.0, 1.0}), std::invalid_argument);
}

TEST(HermitianExpm, PauliXRotation) {
  // exp(-i a X) = cos a I - i sin a X
  const double a = 0.7;
  const auto u = hermitian_expm(pauli_x(), a);
  const auto expected = std::cos(a) * ComplexMatrix::identity(2) + cplx{0.0, -std::sin(a)} * pauli_x();
  EXPECT_LE(u.max_abs_diff(expected), 1e-14);
}

TEST(HermitianExpm, DiagonalGenerator) {
  const cplx d[] = {2.0, 0.0, 0.0, -2.0};
  const auto u = hermitian_expm(ComplexMatrix::diagonal(d), 0.25);
  EXPECT_LE(std::abs(u(0, 0) - std::exp(cplx{0.0, -0.5})), 1e-15);
  EXPECT_LE(std::abs(u(3, 3) - std::exp(cplx{0.0, 0.5})), 1e-15);
  EXPECT_LE(std::abs(u(1, 1) - 1.0), 1e-15);
}

TEST(HermitianExpm, MatchesSeriesOracle) {
  std::mt19937_64 rng(13);
  for (std::size_t dim : {2u, 4u, 8u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto h = random_hermitian(dim, rng);
      const auto u = hermitian_expm(h, 0.3);
      EXPECT_LE(testing::max_diff(u, oracle::expm_series(testing::to_oracle(h), 0.3)), 1e-10);
      EXPECT_LE(u.unitarity_error(), 1e-10);
    }
  }
}

TEST(HermitianExpm, NonHermitianRejected) {
  auto m = pauli_x();
  m(0, 1) = 2.0;
  EXPECT_THROW(hermitian_expm(m, 1.0), std::invalid_argument);
}

TEST(SpectralPropagator, GroupProperty) {
  std::mt19937_64 rng(14);
  const auto h = random_hermitian(4, rng);
  const SpectralPropagator prop(h);
  EXPECT_LE((prop.at(0.4) * prop.at(0.9)).max_abs_diff(prop.at(1.3)), 1e-12);
  EXPECT_LE(prop.at(0.0).max_abs_diff(ComplexMatrix::identity(4)), 1e-14);
}

TEST(OperatorSchmidt, ProductHasRankOne) {
  std::mt19937_64 rng(15);
  const auto a = random_matrix(2, rng), b = random_matrix(2, rng);
  const auto sv = operator_schmidt_coefficients(kron(a, b), 2, 2);
  ASSERT_EQ(sv.size(), 4u);
  EXPECT_GT(sv[0], 0.1);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_LE(sv[i], 1e-12);
}

TEST(OperatorSchmidt, CnotHasRankTwo) {
  const ComplexMatrix cnot = ComplexMatrix::from_rows(
      {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}});
  const auto sv = operator_schmidt_coefficients(cnot, 2, 2);
  EXPECT_NEAR(sv[0], std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(sv[1], std::sqrt(2.0), 1e-12);
  EXPECT_LE(sv[2], 1e-12);
}

TEST(DensityMatrix, ValidatesInvariants) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix(3)), std::invalid_argument);  // not a qubit register
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), std::invalid_argument);  // trace 2
  EXPECT_THROW(DensityMatrix(pauli_z() * cplx{0.5} + ComplexMatrix::identity(2) * cplx{0.0}), std::invalid_argument);
  auto nonherm = ComplexMatrix::identity(2) * cplx{0.5};
  nonherm(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{nonherm}, std::invalid_argument);
  // trace 1 but an eigenvalue of -0.5
  const auto neg = ComplexMatrix::from_rows({{1.5, 0.0}, {0.0, -0.5}});
  EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);
}

TEST(DensityMatrix, SubnormalizedAllowedWhenFlagged) {
  const DensityMatrix half(ComplexMatrix::identity(2) * cplx{0.25}, false);
  EXPECT_NEAR(half.trace(), 0.5, 1e-15);
  EXPECT_NEAR(half.normalized().trace(), 1.0, 1e-15);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2), false), std::invalid_argument);
}

TEST(DensityMatrix, Factories) {
  const auto b = DensityMatrix::basis_state(2, 1);
  EXPECT_EQ(b.qubit_count(), 2u);
  EXPECT_EQ(b(1, 1), cplx{1.0});
  EXPECT_TRUE(b.invariant_violation().empty());
  EXPECT_NEAR(DensityMatrix::maximally_mixed(3)(5, 5).real(), 0.125, 1e-15);
  EXPECT_THROW(DensityMatrix::basis_state(2, 4), std::out_of_range);
  EXPECT_THROW(qubits_for_dim(6), std::invalid_argument);
}

}  // namespace
}  // namespace qswitch
