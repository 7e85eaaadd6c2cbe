// qstate.hpp - dense operator algebra for small qubit registers
//
// Basis convention: site 1 is the most significant tensor factor, so the
// computational basis index of |b_1 b_2 ... b_n> is sum_i b_i 2^(n-i) and
// a Pauli on site i flips bit (n - i).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace qrc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr int kMaxQubits = 12;

/// Tolerance for the Hermiticity, trace and positivity checks on DensityMatrix.
inline constexpr double kStateTolerance = 1e-9;

constexpr Eigen::Index dim_of(int n_qubits) { return Eigen::Index{1} << n_qubits; }

/// Bit mask selecting `site` (1-based) in a basis index of an n-qubit register.
constexpr std::size_t site_mask(int site, int n_qubits) {
  return std::size_t{1} << (n_qubits - site);
}

enum class Pauli { X, Z };

/// Square operator on n qubits.
class QubitOperator {
public:
  /// Throws ArgumentError if `m` is not square with a power-of-two size.
  explicit QubitOperator(CMatrix m);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }

private:
  int n_qubits_;
  CMatrix matrix_;
};

/// I ⊗ ... ⊗ P ⊗ ... ⊗ I with P on `site`.
QubitOperator pauli_embed(Pauli kind, int site, int n_qubits);

/// Hermitian, unit-trace, nonnegative-diagonal state on n qubits.
///
/// Every factory checks the invariants to kStateTolerance and throws
/// NumericalError when they are violated, so a DensityMatrix in hand is
/// always valid.
class DensityMatrix {
public:
  static DensityMatrix from_matrix(CMatrix m);

  /// I / 2^n.
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const CMatrix& matrix() const { return matrix_; }

  Complex trace() const { return matrix_.trace(); }
  double purity() const;
  /// Tr[rho A].
  Complex expectation(const CMatrix& op) const;

  /// Largest entrywise |rho - rho^dagger|.
  double hermiticity_error() const;

private:
  DensityMatrix(int n_qubits, CMatrix m) : n_qubits_(n_qubits), matrix_(std::move(m)) {}

  int n_qubits_;
  CMatrix matrix_;
};

/// Tr_1[rho]: traces out site 1, returning an (n-1)-qubit state.
DensityMatrix partial_trace_first(const DensityMatrix& rho);

/// Single-qubit amplitudes of sqrt(1-s)|+> + sqrt(s)|->, in the Z basis.
Eigen::Vector2d input_amplitudes(double s);

/// |psi><psi| ⊗ sigma for a real single-qubit amplitude vector psi.
DensityMatrix tensor_first(const Eigen::Vector2d& psi, const DensityMatrix& sigma);

/// |psi_s><psi_s| ⊗ Tr_1[rho].
DensityMatrix inject_first(const DensityMatrix& rho, double s);

/// (m + m^dagger)/2 rescaled to unit trace. Accepts an unnormalized matrix.
DensityMatrix rehermitize(const CMatrix& m);
DensityMatrix rehermitize(const DensityMatrix& rho);

} // namespace qrc
