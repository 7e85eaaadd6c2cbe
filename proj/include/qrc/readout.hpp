// readout.hpp - linear readout training, prediction and scoring

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace qrc {

/// Time-step groups: washout (discarded), training, evaluation.
struct SplitPlan {
  int n_washout = 0;
  int n_train = 0;
  int n_test = 0;

  int total() const { return n_washout + n_train + n_test; }
  /// Throws ArgumentError on negative sizes. Returns false (a warning
  /// condition) when n_train < features + 1.
  bool check(Eigen::Index features_per_step) const;
};

struct ReadoutModel {
  Eigen::VectorXd weights;
  double bias = 0.0;

  Eigen::Index width() const { return weights.size(); }
};

/// Relative singular-value cutoff used by train().
inline constexpr double kSingularCutoff = 1e-12;

/// Minimizes sum_k (y_k - target_k)^2 + ridge * |W|^2 over the weights and an
/// unpenalized scalar bias. Features are centered (which absorbs the bias)
/// and the weight problem is solved through a thin SVD with singular values
/// below kSingularCutoff * s_max discarded.
ReadoutModel train(const Eigen::Ref<const Eigen::MatrixXd>& features, std::span<const double> targets,
                   double ridge = 0.0);

std::vector<double> predict(const ReadoutModel& model, const Eigen::Ref<const Eigen::MatrixXd>& features);
double predict_row(const ReadoutModel& model, const Eigen::Ref<const Eigen::RowVectorXd>& row);

/// cov(y_true, y_pred) / (sigma(y_true) sigma(y_pred)) with population
/// normalization, clamped to [-1, 1]; values within 1e-14 of +-1 are returned
/// as exactly +-1. Throws DegenerateError if either deviation is below 1e-12.
double normalized_covariance(std::span<const double> y_true, std::span<const double> y_pred);

/// Same, returning nullopt instead of throwing on degenerate variance.
std::optional<double> try_normalized_covariance(std::span<const double> y_true,
                                                std::span<const double> y_pred);

/// Aggregate over samples; degenerate samples (nullopt) are excluded from
/// the mean and counted separately.
struct Score {
  std::vector<std::optional<double>> per_sample;
  double mean = 0.0;
  double std_error = 0.0; ///< sample standard deviation / sqrt(n); 0 for n < 2
  int n = 0;
  int n_degenerate = 0;
};

Score summarize(std::vector<std::optional<double>> per_sample);

} // namespace qrc
