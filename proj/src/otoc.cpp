#include "qrc/otoc.hpp"

#include "qrc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace qrc {

namespace {

constexpr double kImagTolerance = 1e-9;
constexpr double kBoundSlack = 1e-9;

} // namespace

OtocEvaluator::OtocEvaluator(const SpinChainSpec& spec) : n_qubits_(spec.n_qubits()) {
  const RMatrix h = hamiltonian_matrix(spec);
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(h);
  if (eig.info() != Eigen::Success)
    throw NumericalError("eigendecomposition failed for OTOC Hamiltonian");
  energies_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();

  const Eigen::Index d = h.rows();
  const std::size_t mask = site_mask(1, n_qubits_);
  RMatrix xq(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    xq.row(r) = eigenvectors_.row(static_cast<Eigen::Index>(static_cast<std::size_t>(r) ^ mask));
  x1_eig_ = eigenvectors_.transpose() * xq;
}

double OtocEvaluator::operator()(double t) const {
  if (!(t >= 0.0))
    throw ArgumentError("OTOC time must be >= 0");
  const Eigen::Index d = energies_.size();
  const RMatrix& q = eigenvectors_;

  // X_1(t) in the computational basis: Q (X~ o e^{i(E_m - E_n)t}) Q^T.
  const Eigen::ArrayXd theta = energies_.array() * t;
  const Eigen::ArrayXXd gap = theta.replicate(1, d) - theta.transpose().replicate(d, 1);
  CMatrix a(d, d);
  a.real() = q * (x1_eig_.array() * gap.cos()).matrix() * q.transpose();
  a.imag() = q * (x1_eig_.array() * gap.sin()).matrix() * q.transpose();

  // Tr[A X_i A X_i] = sum_{r,c} A[r,c] A[c^m, r^m] since X_i permutes basis states.
  Complex total = 0.0;
  for (int site = 2; site <= n_qubits_; ++site) {
    const std::size_t mask = site_mask(site, n_qubits_);
    Complex acc = 0.0;
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto cm = static_cast<Eigen::Index>(static_cast<std::size_t>(c) ^ mask);
      for (Eigen::Index r = 0; r < d; ++r)
        acc += a(r, c) * a(cm, static_cast<Eigen::Index>(static_cast<std::size_t>(r) ^ mask));
    }
    total += acc;
  }
  const Complex mean_corr = total / (static_cast<double>(d) * (n_qubits_ - 1));
  if (std::abs(mean_corr.imag()) > kImagTolerance) {
    std::ostringstream msg;
    msg << "OTOC imaginary residue " << mean_corr.imag() << " at t = " << t;
    throw NumericalError(msg.str());
  }
  const double value = 1.0 - mean_corr.real();
  if (value < -kBoundSlack || value > 2.0 + kBoundSlack) {
    std::ostringstream msg;
    msg << "OTOC value " << value << " outside [0, 2] at t = " << t;
    throw NumericalError(msg.str());
  }
  return value;
}

double otoc_at(const SpinChainSpec& spec, double t) { return OtocEvaluator(spec)(t); }

std::optional<double> threshold_crossing(std::span<const double> taus, std::span<const double> values,
                                         double threshold) {
  if (taus.size() != values.size())
    throw ArgumentError("time grid and values differ in length");
  if (taus.empty())
    return std::nullopt;
  if (values[0] >= threshold)
    return taus[0];
  for (std::size_t k = 0; k + 1 < taus.size(); ++k) {
    if (values[k] < threshold && values[k + 1] >= threshold) {
      const double frac = (threshold - values[k]) / (values[k + 1] - values[k]);
      return taus[k] + frac * (taus[k + 1] - taus[k]);
    }
  }
  return std::nullopt;
}

OtocCurve otoc_curve(const SpinChainSpec& spec, std::span<const double> taus, double threshold) {
  if (taus.empty())
    throw ArgumentError("OTOC time grid is empty");
  for (std::size_t k = 1; k < taus.size(); ++k)
    if (!(taus[k] > taus[k - 1]))
      throw ArgumentError("OTOC time grid must be strictly increasing");

  const OtocEvaluator otoc(spec);
  OtocCurve curve;
  curve.taus.assign(taus.begin(), taus.end());
  curve.threshold = threshold;
  curve.values.reserve(taus.size());
  for (double t : taus)
    curve.values.push_back(otoc(t));
  curve.tau_th = threshold_crossing(curve.taus, curve.values, threshold);
  return curve;
}

} // namespace qrc
