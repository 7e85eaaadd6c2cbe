// reservoir.hpp - the input-driven reservoir loop
//
// Per input step k:  rho <- |psi_{s_k}><psi_{s_k}| ⊗ Tr_1[rho]
//                    row_k <- (1 + Tr[rho X_i(v)])/2 + noise,  v = 1..V
//                    rho <- U_tau rho U_tau^dagger, rehermitized

#pragma once

#include "qrc/evolve.hpp"
#include "qrc/readout.hpp"
#include "qrc/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qrc {

struct SignalMatrix {
  Eigen::MatrixXd entries; ///< n_steps x (V*N), columns ordered by feature_index
  double noise_sigma = 0.0;

  Eigen::Index n_steps() const { return entries.rows(); }
  Eigen::Index features_per_step() const { return entries.cols(); }
};

DensityMatrix initial_state(int n_qubits);

/// Stateful runner for one drive. Holds a reference to the plan, which must
/// outlive it.
class Reservoir {
public:
  Reservoir(const EvolutionPlan& plan, double noise_sigma, std::uint64_t noise_seed);

  /// Injects s, returns the (noisy) signal row and advances one full step.
  Eigen::RowVectorXd feed(double s);

  const DensityMatrix& state() const { return rho_; }
  const EvolutionPlan& plan() const { return *plan_; }

private:
  const EvolutionPlan* plan_;
  double sigma_;
  CounterRng noise_;
  DensityMatrix rho_;
};

SignalMatrix drive(const EvolutionPlan& plan, std::span<const double> inputs, double noise_sigma = 0.0,
                   std::uint64_t noise_seed = 0);

/// Drives `warm_inputs` open loop, then runs `horizon` closed-loop steps.
/// Prediction j (1-based) is the readout of the row produced after the last
/// warm input for j = 1, and after reinjecting clamp(prediction j-1, 0, 1)
/// for j > 1; prediction j therefore targets input M + j.
std::vector<double> drive_closed_loop(const EvolutionPlan& plan, const ReadoutModel& model,
                                      std::span<const double> warm_inputs, int horizon,
                                      double noise_sigma = 0.0, std::uint64_t noise_seed = 0);

/// Closed-loop continuation of an already-driven reservoir, starting from
/// the row produced by its last open-loop input.
std::vector<double> continue_closed_loop(Reservoir& reservoir, const ReadoutModel& model,
                                         Eigen::RowVectorXd last_row, int horizon);

} // namespace qrc
