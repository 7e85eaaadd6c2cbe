// otoc.hpp - infinite-temperature out-of-time-order correlator
//
//   O(t) = 1 - 1/(N-1) sum_{i=2..N} Tr[X_1(t) X_i X_1(t) X_i] / 2^N,
//   X_1(t) = e^{iHt} X_1 e^{-iHt}

#pragma once

#include "qrc/chain.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qrc {

inline constexpr double kDefaultOtocThreshold = 0.2;

/// Diagonalizes H once and evaluates O(t) for any t.
class OtocEvaluator {
public:
  explicit OtocEvaluator(const SpinChainSpec& spec);

  /// Throws ArgumentError for t < 0, NumericalError if the trace has an
  /// imaginary residue above 1e-9 or the value leaves [0, 2].
  double operator()(double t) const;

private:
  int n_qubits_;
  Eigen::VectorXd energies_;
  RMatrix eigenvectors_;
  RMatrix x1_eig_; ///< Q^T X_1 Q
};

double otoc_at(const SpinChainSpec& spec, double t);

struct OtocCurve {
  std::vector<double> taus;
  std::vector<double> values;
  double threshold = kDefaultOtocThreshold;
  std::optional<double> tau_th; ///< nullopt: threshold not reached on the grid
};

/// First upward threshold crossing, linearly interpolated between the first
/// pair with values[a] < threshold <= values[a+1]; the first grid point if it
/// already reaches the threshold.
std::optional<double> threshold_crossing(std::span<const double> taus, std::span<const double> values,
                                         double threshold);

/// Throws ArgumentError if the grid is empty or not strictly increasing.
OtocCurve otoc_curve(const SpinChainSpec& spec, std::span<const double> taus,
                     double threshold = kDefaultOtocThreshold);

} // namespace qrc
