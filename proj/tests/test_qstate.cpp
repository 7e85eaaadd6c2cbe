#include "doctest.h"
#include "oracle.hpp"

#include "qrc/errors.hpp"
#include "qrc/qstate.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <random>

using namespace qrc;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("pauli_embed single-site and tensor cases") {
  CMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  CHECK(max_abs(pauli_embed(Pauli::X, 1, 1).matrix() - x) == 0.0);

  const CMatrix z2 = pauli_embed(Pauli::Z, 2, 2).matrix();
  CHECK(max_abs(z2 - Eigen::Vector4cd(1.0, -1.0, 1.0, -1.0).asDiagonal().toDenseMatrix()) == 0.0);

  CMatrix anti = CMatrix::Zero(4, 4);
  anti.topRightCorner(2, 2).setIdentity();
  anti.bottomLeftCorner(2, 2).setIdentity();
  CHECK(max_abs(pauli_embed(Pauli::X, 1, 2).matrix() - anti) == 0.0);
}

TEST_CASE("pauli_embed agrees with Kronecker products") {
  for (int n = 1; n <= 4; ++n)
    for (int site = 1; site <= n; ++site) {
      CHECK(max_abs(pauli_embed(Pauli::X, site, n).matrix() - oracle::kron_embed(oracle::pauli_x(), site, n)) ==
            0.0);
      CHECK(max_abs(pauli_embed(Pauli::Z, site, n).matrix() - oracle::kron_embed(oracle::pauli_z(), site, n)) ==
            0.0);
    }
}

TEST_CASE("pauli_embed properties") {
  const int n = 4;
  for (int i = 1; i <= n; ++i) {
    CHECK(pauli_embed(Pauli::X, i, n).matrix().trace() == Complex(0.0, 0.0));
    CHECK(pauli_embed(Pauli::Z, i, n).matrix().trace() == Complex(0.0, 0.0));
    for (int j = 1; j <= n; ++j) {
      if (i == j)
        continue;
      const CMatrix a = pauli_embed(Pauli::X, i, n).matrix();
      const CMatrix b = pauli_embed(Pauli::X, j, n).matrix();
      CHECK(max_abs(a * b - b * a) <= 1e-12);
    }
  }
}

TEST_CASE("pauli_embed rejects bad sites") {
  CHECK_THROWS_AS(pauli_embed(Pauli::X, 0, 3), ArgumentError);
  CHECK_THROWS_AS(pauli_embed(Pauli::X, 4, 3), ArgumentError);
  CHECK_THROWS_AS(pauli_embed(Pauli::Z, 1, kMaxQubits + 1), CapacityError);
}

TEST_CASE("QubitOperator validates shape") {
  CHECK_THROWS_AS(QubitOperator(CMatrix::Identity(3, 3)), ArgumentError);
  CHECK_THROWS_AS(QubitOperator(CMatrix::Identity(2, 4)), ArgumentError);
  CHECK(QubitOperator(CMatrix::Identity(8, 8)).n_qubits() == 3);
}

TEST_CASE("DensityMatrix validation") {
  CHECK_NOTHROW(DensityMatrix::from_matrix(CMatrix::Identity(4, 4) / 4.0));
  CHECK_THROWS_AS(DensityMatrix::from_matrix(CMatrix::Identity(4, 4)), NumericalError);
  CMatrix bad = CMatrix::Identity(2, 2) / 2.0;
  bad(0, 1) = Complex(0.0, 1e-6);
  CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), NumericalError);
  CMatrix negative(2, 2);
  negative << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityMatrix::from_matrix(negative), NumericalError);
}

TEST_CASE("maximally mixed states") {
  const DensityMatrix one = DensityMatrix::maximally_mixed(1);
  CHECK(max_abs(one.matrix() - CMatrix::Identity(2, 2) * 0.5) == 0.0);
  const DensityMatrix three = DensityMatrix::maximally_mixed(3);
  CHECK(max_abs(three.matrix() - CMatrix::Identity(8, 8) / 8.0) == 0.0);
  for (int n = 1; n <= 6; ++n)
    CHECK(DensityMatrix::maximally_mixed(n).purity() == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-14));
  CHECK_THROWS_AS(DensityMatrix::maximally_mixed(kMaxQubits + 1), CapacityError);
}

TEST_CASE("partial_trace_first examples") {
  std::mt19937_64 gen(7);
  const CMatrix sigma = oracle::random_density(2, gen);
  CMatrix zero = CMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  const CMatrix rho = Eigen::kroneckerProduct(zero, sigma).eval();
  CHECK(max_abs(partial_trace_first(DensityMatrix::from_matrix(rho)).matrix() - sigma) <= 1e-15);

  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  CHECK(max_abs(partial_trace_first(mixed).matrix() - CMatrix::Identity(2, 2) * 0.5) == 0.0);

  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix r = oracle::random_density(3, gen);
    CHECK(max_abs(partial_trace_first(DensityMatrix::from_matrix(r)).matrix() -
                  oracle::loop_partial_trace_first(r)) <= 1e-14);
  }
  CHECK_THROWS_AS(partial_trace_first(DensityMatrix::maximally_mixed(1)), ArgumentError);
}

TEST_CASE("partial trace undoes the product construction") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u;
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix sigma = DensityMatrix::from_matrix(oracle::random_density(3, gen));
    const DensityMatrix rho = tensor_first(input_amplitudes(u(gen)), sigma);
    CHECK(max_abs(partial_trace_first(rho).matrix() - sigma.matrix()) <= 1e-14);
  }
}

TEST_CASE("input amplitudes") {
  // |psi> = sqrt(1-s)|+> + sqrt(s)|->, so <X> = 1 - 2s.
  const DensityMatrix base = DensityMatrix::maximally_mixed(2);
  const CMatrix x1 = pauli_embed(Pauli::X, 1, 2).matrix();
  const CMatrix z1 = pauli_embed(Pauli::Z, 1, 2).matrix();
  CHECK(inject_first(base, 0.0).expectation(x1).real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(inject_first(base, 1.0).expectation(x1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(inject_first(base, 0.5).expectation(z1).real() == doctest::Approx(1.0).epsilon(1e-15));
  const Eigen::Vector2d half = input_amplitudes(0.5);
  CHECK(half(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(half(1)) <= 1e-15);

  for (double s : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
    const CMatrix expected = oracle::input_projector(s);
    const Eigen::Vector2d psi = input_amplitudes(s);
    const Eigen::Matrix2d got = psi * psi.transpose();
    CHECK((got.cast<Complex>() - expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
  CHECK_THROWS_AS(input_amplitudes(-0.01), ArgumentError);
  CHECK_THROWS_AS(input_amplitudes(1.01), ArgumentError);
  CHECK_THROWS_AS(input_amplitudes(std::nan("")), ArgumentError);
}

TEST_CASE("inject_first output is a valid density matrix") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 3;
    const DensityMatrix rho = DensityMatrix::from_matrix(oracle::random_density(n, gen));
    const double s = u(gen);
    const DensityMatrix out = inject_first(rho, s);
    REQUIRE(out.hermiticity_error() <= kStateTolerance);
    REQUIRE(std::abs(out.trace() - 1.0) <= kStateTolerance);
    REQUIRE(out.matrix().diagonal().real().minCoeff() >= -kStateTolerance);
    const CMatrix expected =
        Eigen::kroneckerProduct(oracle::input_projector(s), oracle::loop_partial_trace_first(rho.matrix())).eval();
    REQUIRE(max_abs(out.matrix() - expected) <= 1e-14);
  }
}

TEST_CASE("rehermitize") {
  std::mt19937_64 gen(5);
  const CMatrix rho = oracle::random_density(2, gen);
  CHECK(max_abs(rehermitize(rho).matrix() - rho) <= 1e-15);

  CMatrix drifted = rho;
  drifted(1, 1) += Complex(0.0, 1e-10);
  CHECK(rehermitize(drifted).matrix()(1, 1).imag() == 0.0);

  CHECK(max_abs(rehermitize(CMatrix(2.0 * rho)).matrix() - rho) <= 1e-15);
  CHECK_THROWS_AS(rehermitize(CMatrix::Zero(4, 4)), DegenerateError);
}
