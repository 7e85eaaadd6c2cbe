#include "qrc/reservoir.hpp"

#include "qrc/errors.hpp"

#include <algorithm>
#include <string>

namespace qrc {

DensityMatrix initial_state(int n_qubits) { return DensityMatrix::maximally_mixed(n_qubits); }

Reservoir::Reservoir(const EvolutionPlan& plan, double noise_sigma, std::uint64_t noise_seed)
    : plan_(&plan), sigma_(noise_sigma), noise_(noise_seed), rho_(initial_state(plan.n_qubits())) {
  if (!(noise_sigma >= 0.0))
    throw ArgumentError("noise sigma must be >= 0");
}

Eigen::RowVectorXd Reservoir::feed(double s) {
  const Eigen::Vector2d psi = input_amplitudes(s);
  const DensityMatrix sigma = partial_trace_first(rho_);
  Eigen::RowVectorXd row = measure_subintervals(tensor_first(psi, sigma), *plan_);
  if (sigma_ > 0.0)
    for (Eigen::Index k = 0; k < row.size(); ++k)
      row(k) += noise_.uniform(-sigma_, sigma_);
  rho_ = rehermitize(evolve_injected(psi, sigma, *plan_));
  return row;
}

SignalMatrix drive(const EvolutionPlan& plan, std::span<const double> inputs, double noise_sigma,
                   std::uint64_t noise_seed) {
  for (double s : inputs)
    if (!(s >= 0.0 && s <= 1.0))
      throw ArgumentError("drive input " + std::to_string(s) + " outside [0, 1]");

  Reservoir reservoir(plan, noise_sigma, noise_seed);
  SignalMatrix signals{Eigen::MatrixXd(static_cast<Eigen::Index>(inputs.size()), plan.features_per_step()),
                       noise_sigma};
  for (std::size_t k = 0; k < inputs.size(); ++k)
    signals.entries.row(static_cast<Eigen::Index>(k)) = reservoir.feed(inputs[k]);
  return signals;
}

std::vector<double> continue_closed_loop(Reservoir& reservoir, const ReadoutModel& model,
                                         Eigen::RowVectorXd last_row, int horizon) {
  if (horizon < 1)
    throw ArgumentError("closed-loop horizon must be >= 1");
  std::vector<double> predictions;
  predictions.reserve(static_cast<std::size_t>(horizon));
  predictions.push_back(predict_row(model, last_row));
  for (int j = 1; j < horizon; ++j) {
    last_row = reservoir.feed(std::clamp(predictions.back(), 0.0, 1.0));
    predictions.push_back(predict_row(model, last_row));
  }
  return predictions;
}

std::vector<double> drive_closed_loop(const EvolutionPlan& plan, const ReadoutModel& model,
                                      std::span<const double> warm_inputs, int horizon,
                                      double noise_sigma, std::uint64_t noise_seed) {
  if (model.width() != plan.features_per_step())
    throw ArgumentError("readout width " + std::to_string(model.width()) +
                        " does not match " + std::to_string(plan.features_per_step()) +
                        " features per step");
  if (horizon < 1)
    throw ArgumentError("closed-loop horizon must be >= 1");
  if (warm_inputs.empty())
    throw ArgumentError("closed loop needs at least one warm input");

  Reservoir reservoir(plan, noise_sigma, noise_seed);
  Eigen::RowVectorXd row;
  for (double s : warm_inputs)
    row = reservoir.feed(s);

  return continue_closed_loop(reservoir, model, row, horizon);
}

} // namespace qrc
