#include "qrc/qstate.hpp"

#include "qrc/errors.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace qrc {

namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 1 || !std::has_single_bit(static_cast<std::size_t>(dim)))
    throw ArgumentError("operator dimension " + std::to_string(dim) + " is not a power of two");
  return std::countr_zero(static_cast<std::size_t>(dim));
}

void check_qubit_count(int n_qubits, int min_qubits) {
  if (n_qubits < min_qubits)
    throw ArgumentError("need at least " + std::to_string(min_qubits) + " qubit(s), got " +
                        std::to_string(n_qubits));
  if (n_qubits > kMaxQubits)
    throw CapacityError(std::to_string(n_qubits) + " qubits exceeds the cap of " +
                        std::to_string(kMaxQubits));
}

double max_asymmetry(const CMatrix& m) {
  double worst = 0.0;
  const Eigen::Index d = m.rows();
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i <= j; ++i)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

} // namespace

QubitOperator::QubitOperator(CMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols())
    throw ArgumentError("operator must be square");
  n_qubits_ = qubits_for_dim(matrix_.rows());
}

QubitOperator pauli_embed(Pauli kind, int site, int n_qubits) {
  check_qubit_count(n_qubits, 1);
  if (site < 1 || site > n_qubits)
    throw ArgumentError("site " + std::to_string(site) + " outside [1, " +
                        std::to_string(n_qubits) + "]");
  const Eigen::Index d = dim_of(n_qubits);
  const std::size_t mask = site_mask(site, n_qubits);
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    const auto ub = static_cast<std::size_t>(b);
    if (kind == Pauli::X)
      m(static_cast<Eigen::Index>(ub ^ mask), b) = 1.0;
    else
      m(b, b) = (ub & mask) ? -1.0 : 1.0;
  }
  return QubitOperator(std::move(m));
}

DensityMatrix DensityMatrix::from_matrix(CMatrix m) {
  if (m.rows() != m.cols())
    throw ArgumentError("density matrix must be square");
  const int n = qubits_for_dim(m.rows());
  check_qubit_count(n, 0);

  const double herm = max_asymmetry(m);
  if (herm > kStateTolerance)
    throw NumericalError("density matrix Hermiticity error " + std::to_string(herm));
  const double trace_err = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_err > kStateTolerance)
    throw NumericalError("density matrix trace error " + std::to_string(trace_err));
  const double min_diag = m.diagonal().real().minCoeff();
  if (min_diag < -kStateTolerance)
    throw NumericalError("density matrix has negative population " + std::to_string(min_diag));
  return DensityMatrix(n, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits, 1);
  const Eigen::Index d = dim_of(n_qubits);
  return DensityMatrix(n_qubits, CMatrix::Identity(d, d) / static_cast<double>(d));
}

double DensityMatrix::purity() const {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.squaredNorm();
}

Complex DensityMatrix::expectation(const CMatrix& op) const {
  if (op.rows() != dim() || op.cols() != dim())
    throw ArgumentError("operator dimension does not match state");
  // Tr[rho A] = sum_ij rho_ij A_ji
  return (matrix_.transpose().cwiseProduct(op)).sum();
}

double DensityMatrix::hermiticity_error() const { return max_asymmetry(matrix_); }

DensityMatrix partial_trace_first(const DensityMatrix& rho) {
  if (rho.n_qubits() < 2)
    throw ArgumentError("partial trace over the first qubit needs at least 2 qubits");
  const Eigen::Index h = rho.dim() / 2;
  const CMatrix& m = rho.matrix();
  CMatrix reduced = m.topLeftCorner(h, h) + m.bottomRightCorner(h, h);
  return DensityMatrix::from_matrix(std::move(reduced));
}

Eigen::Vector2d input_amplitudes(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw ArgumentError("input value " + std::to_string(s) + " outside [0, 1]");
  const double a = std::sqrt(1.0 - s);
  const double b = std::sqrt(s);
  // |+> = (|0> + |1>)/sqrt2, |-> = (|0> - |1>)/sqrt2
  return Eigen::Vector2d((a + b) * M_SQRT1_2, (a - b) * M_SQRT1_2);
}

DensityMatrix tensor_first(const Eigen::Vector2d& psi, const DensityMatrix& sigma) {
  const Eigen::Index h = sigma.dim();
  CMatrix m(2 * h, 2 * h);
  m.topLeftCorner(h, h) = (psi(0) * psi(0)) * sigma.matrix();
  m.topRightCorner(h, h) = (psi(0) * psi(1)) * sigma.matrix();
  m.bottomLeftCorner(h, h) = (psi(1) * psi(0)) * sigma.matrix();
  m.bottomRightCorner(h, h) = (psi(1) * psi(1)) * sigma.matrix();
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix inject_first(const DensityMatrix& rho, double s) {
  const Eigen::Vector2d psi = input_amplitudes(s);
  return tensor_first(psi, partial_trace_first(rho));
}

DensityMatrix rehermitize(const CMatrix& m) {
  if (m.rows() != m.cols())
    throw ArgumentError("density matrix must be square");
  const Complex tr = m.trace();
  if (std::abs(tr) < 1e-12)
    throw DegenerateError("cannot normalize a matrix with vanishing trace");
  const double scale = 1.0 / tr.real();
  CMatrix out(m.rows(), m.cols());
  const Eigen::Index d = m.rows();
  for (Eigen::Index j = 0; j < d; ++j) {
    out(j, j) = Complex(m(j, j).real() * scale, 0.0);
    for (Eigen::Index i = 0; i < j; ++i) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i))) * scale;
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix rehermitize(const DensityMatrix& rho) { return rehermitize(rho.matrix()); }

} // namespace qrc
