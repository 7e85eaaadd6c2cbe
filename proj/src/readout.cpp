#include "qrc/readout.hpp"

#include "qrc/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qrc {

namespace {

constexpr double kUnitCorrelationSlack = 1e-14;

} // namespace

bool SplitPlan::check(Eigen::Index features_per_step) const {
  if (n_washout < 0 || n_train < 0 || n_test < 0)
    throw ArgumentError("split sizes must be nonnegative");
  return n_train >= features_per_step + 1;
}

ReadoutModel train(const Eigen::Ref<const Eigen::MatrixXd>& features, std::span<const double> targets,
                   double ridge) {
  const Eigen::Index rows = features.rows();
  if (rows == 0)
    throw ArgumentError("empty training set");
  if (static_cast<std::size_t>(rows) != targets.size())
    throw ArgumentError("feature rows (" + std::to_string(rows) + ") and targets (" +
                        std::to_string(targets.size()) + ") differ");
  if (!(ridge >= 0.0))
    throw ArgumentError("ridge must be >= 0");

  // Owned copies keep reductions independent of the caller's buffer alignment.
  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(targets.data(), rows);
  const Eigen::RowVectorXd x_mean = features.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd xc = features.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  ReadoutModel model;
  model.weights = Eigen::VectorXd::Zero(features.cols());
  if (features.cols() > 0) {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(xc, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& s = svd.singularValues();
    const double cutoff = (s.size() > 0 ? s(0) : 0.0) * kSingularCutoff;
    const Eigen::VectorXd uty = svd.matrixU().transpose() * yc;
    Eigen::VectorXd filtered = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index k = 0; k < s.size(); ++k)
      if (s(k) > cutoff && s(k) > 0.0)
        filtered(k) = s(k) / (s(k) * s(k) + ridge) * uty(k);
    model.weights = svd.matrixV() * filtered;
  }
  model.bias = y_mean - x_mean.dot(model.weights);
  return model;
}

std::vector<double> predict(const ReadoutModel& model, const Eigen::Ref<const Eigen::MatrixXd>& features) {
  if (features.cols() != model.width())
    throw ArgumentError("feature width " + std::to_string(features.cols()) +
                        " does not match model width " + std::to_string(model.width()));
  const Eigen::VectorXd y = (features * model.weights).array() + model.bias;
  return {y.data(), y.data() + y.size()};
}

double predict_row(const ReadoutModel& model, const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  if (row.size() != model.width())
    throw ArgumentError("feature width " + std::to_string(row.size()) +
                        " does not match model width " + std::to_string(model.width()));
  return row.dot(model.weights) + model.bias;
}

std::optional<double> try_normalized_covariance(std::span<const double> y_true,
                                                std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size())
    throw ArgumentError("covariance inputs differ in length");
  if (y_true.size() < 2)
    throw ArgumentError("covariance needs at least two points");
  const auto n = static_cast<Eigen::Index>(y_true.size());
  const Eigen::ArrayXd a = Eigen::Map<const Eigen::ArrayXd>(y_true.data(), n);
  const Eigen::ArrayXd b = Eigen::Map<const Eigen::ArrayXd>(y_pred.data(), n);
  const Eigen::ArrayXd da = a - a.mean();
  const Eigen::ArrayXd db = b - b.mean();
  const double sa = std::sqrt(da.square().mean());
  const double sb = std::sqrt(db.square().mean());
  if (sa < 1e-12 || sb < 1e-12)
    return std::nullopt;
  const double c = std::clamp((da * db).mean() / (sa * sb), -1.0, 1.0);
  // Affinely related sequences land a few ulps short of +-1; report them exactly.
  if (1.0 - std::abs(c) <= kUnitCorrelationSlack)
    return std::copysign(1.0, c);
  return c;
}

double normalized_covariance(std::span<const double> y_true, std::span<const double> y_pred) {
  const auto c = try_normalized_covariance(y_true, y_pred);
  if (!c)
    throw DegenerateError("normalized covariance undefined: zero variance");
  return *c;
}

Score summarize(std::vector<std::optional<double>> per_sample) {
  Score score;
  score.per_sample = std::move(per_sample);
  double sum = 0.0;
  for (const auto& c : score.per_sample) {
    if (c) {
      sum += *c;
      ++score.n;
    } else {
      ++score.n_degenerate;
    }
  }
  if (score.n == 0) {
    score.mean = std::numeric_limits<double>::quiet_NaN();
    return score;
  }
  score.mean = sum / score.n;
  if (score.n > 1) {
    double ss = 0.0;
    for (const auto& c : score.per_sample)
      if (c)
        ss += (*c - score.mean) * (*c - score.mean);
    score.std_error = std::sqrt(ss / (score.n - 1)) / std::sqrt(static_cast<double>(score.n));
  }
  return score;
}

} // namespace qrc
