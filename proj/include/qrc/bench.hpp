// bench.hpp - disorder/sample-averaged sweeps
//
// Every (grid point, sample) pair is an independent job. Sample s draws its
// disorder, input and noise streams from derive_seed(master_seed, tag, s),
// so a given sample index sees the same disorder pattern (scaled by W) and
// the same input string at every grid point. Results are stored by
// (grid index, sample index), independent of worker scheduling.

#pragma once

#include "qrc/config.hpp"
#include "qrc/otoc.hpp"
#include "qrc/readout.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qrc {

struct GridPoint {
  double disorder = 0.0;
  double alpha = 0.0;
  double tau = 0.0; ///< unused (0) for OTOC sweeps
};

/// Cartesian product disorder x alpha x tau (tau omitted for OTOC), in
/// that nesting order with tau fastest.
std::vector<GridPoint> make_grid(const ExperimentConfig& config);

struct SampleSeeds {
  std::uint64_t disorder;
  std::uint64_t inputs;
  std::uint64_t noise;
};

SampleSeeds sample_seeds(std::uint64_t master_seed, int sample);

struct TaskRecord {
  std::size_t grid = 0;
  int sample = 0;
  std::uint64_t seed = 0; ///< disorder seed
  std::optional<double> score; ///< nullopt: degenerate variance
  double wall_ms = 0.0;
};

struct TaskSweepResult {
  ExperimentConfig config;
  std::vector<GridPoint> grid;
  std::vector<TaskRecord> records; ///< grid-major, then sample
  std::vector<Score> scores;       ///< one per grid point

  int n_degenerate() const;
};

/// One STM or PC sample: covariance on the evaluation split, nullopt if degenerate.
std::optional<double> run_task_sample(const ExperimentConfig& config, const GridPoint& point, int sample);

TaskSweepResult run_task_sweep(const ExperimentConfig& config);

struct MgRecord {
  std::size_t grid = 0;
  int sample = 0;
  std::uint64_t seed = 0;
  std::vector<std::optional<double>> by_horizon; ///< aligned with config.horizons
  double wall_ms = 0.0;
};

struct MgGridSummary {
  std::vector<Score> by_horizon;
  double l_c = 0.0;
  bool censored = false; ///< C never fell below the threshold; l_c = max horizon
};

struct MgSweepResult {
  ExperimentConfig config;
  std::vector<GridPoint> grid;
  std::vector<MgRecord> records;
  std::vector<MgGridSummary> summaries;
};

/// First downward crossing of `threshold`, linearly interpolated between the
/// first pair with values[a] >= threshold > values[a+1]; the first horizon
/// if values[0] is already below. NaN entries are skipped.
std::optional<double> downward_crossing(std::span<const double> horizons, std::span<const double> values,
                                        double threshold);

/// Closed-loop covariances for one sample at every configured horizon.
std::vector<std::optional<double>> run_mg_sample(const ExperimentConfig& config, const GridPoint& point,
                                                 int sample);

MgSweepResult run_mg_sweep(const ExperimentConfig& config);

struct OtocRecord {
  std::size_t grid = 0;
  int sample = 0;
  std::uint64_t seed = 0;
  std::vector<double> values; ///< aligned with config.taus
  std::optional<double> tau_th;
  double wall_ms = 0.0;
};

struct OtocGridSummary {
  std::vector<double> mean;
  std::vector<double> std_error;
  std::optional<double> tau_th_of_mean; ///< crossing of the sample-averaged curve
  Score tau_th;                         ///< per-sample crossings; censored counted in n_degenerate
};

struct OtocSweepResult {
  ExperimentConfig config;
  std::vector<GridPoint> grid;
  std::vector<OtocRecord> records;
  std::vector<OtocGridSummary> summaries;
};

OtocSweepResult run_otoc_sweep(const ExperimentConfig& config);

} // namespace qrc
