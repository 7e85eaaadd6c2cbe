#include "qrc/bench.hpp"

#include "qrc/chain.hpp"
#include "qrc/errors.hpp"
#include "qrc/evolve.hpp"
#include "qrc/parallel.hpp"
#include "qrc/reservoir.hpp"
#include "qrc/rng.hpp"
#include "qrc/tasks.hpp"

#include <chrono>
#include <cmath>
#include <iostream>

namespace qrc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SpinChainSpec sample_chain(const ExperimentConfig& config, const GridPoint& point, std::uint64_t seed) {
  ChainParams params;
  params.n_qubits = config.n_qubits;
  params.coupling = config.coupling;
  params.alpha = point.alpha;
  params.field = config.field;
  params.disorder = point.disorder;
  params.seed = seed;
  return sample_disorder(params);
}

void warn_split(const ExperimentConfig& config) {
  const Eigen::Index features = Eigen::Index{config.subintervals} * config.n_qubits;
  if (!config.split.check(features))
    std::cerr << "warning: " << config.split.n_train << " training steps for " << features
              << " features; the regression is underdetermined\n";
}

template <class Record, class Run>
std::vector<Record> run_jobs(const ExperimentConfig& config, const std::vector<GridPoint>& grid, Run run) {
  const auto samples = static_cast<std::size_t>(config.samples);
  std::vector<Record> records(grid.size() * samples);
  parallel_for(records.size(), config.workers, [&](std::size_t j) {
    Record& rec = records[j];
    rec.grid = j / samples;
    rec.sample = static_cast<int>(j % samples);
    rec.seed = sample_seeds(config.master_seed, rec.sample).disorder;
    const auto start = Clock::now();
    run(rec, grid[rec.grid]);
    rec.wall_ms = elapsed_ms(start);
  });
  return records;
}

} // namespace

std::vector<GridPoint> make_grid(const ExperimentConfig& config) {
  std::vector<GridPoint> grid;
  const bool otoc = config.experiment == Experiment::OTOC;
  for (double w : config.disorders)
    for (double a : config.alphas) {
      if (otoc) {
        grid.push_back({w, a, 0.0});
        continue;
      }
      for (double t : config.taus)
        grid.push_back({w, a, t});
    }
  return grid;
}

SampleSeeds sample_seeds(std::uint64_t master_seed, int sample) {
  const auto idx = static_cast<std::uint64_t>(sample);
  return {derive_seed(master_seed, stream::kDisorder, idx), derive_seed(master_seed, stream::kInputs, idx),
          derive_seed(master_seed, stream::kNoise, idx)};
}

int TaskSweepResult::n_degenerate() const {
  int n = 0;
  for (const auto& s : scores)
    n += s.n_degenerate;
  return n;
}

std::optional<double> run_task_sample(const ExperimentConfig& config, const GridPoint& point, int sample) {
  if (config.experiment != Experiment::STM && config.experiment != Experiment::PC)
    throw ArgumentError("run_task_sample handles STM and PC only");
  const SampleSeeds seeds = sample_seeds(config.master_seed, sample);
  const SpinChainSpec spec = sample_chain(config, point, seeds.disorder);
  const EvolutionPlan plan = make_plan(spec, point.tau, config.subintervals);

  const SplitPlan& split = config.split;
  const std::vector<double> inputs = gen_binary_inputs(split.total(), seeds.inputs);
  const std::vector<double> targets = config.experiment == Experiment::STM
                                          ? stm_targets(inputs, config.k_delta)
                                          : pc_targets(inputs, config.k_delta);
  const SignalMatrix signals = drive(plan, inputs, config.noise, seeds.noise);

  const std::span<const double> all(targets);
  const ReadoutModel model = train(signals.entries.middleRows(split.n_washout, split.n_train),
                                   all.subspan(split.n_washout, split.n_train), config.ridge);
  const std::vector<double> predicted =
      predict(model, signals.entries.middleRows(split.n_washout + split.n_train, split.n_test));
  return try_normalized_covariance(all.subspan(split.n_washout + split.n_train, split.n_test), predicted);
}

TaskSweepResult run_task_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.experiment != Experiment::STM && config.experiment != Experiment::PC)
    throw ConfigError("task sweep needs the stm or pc task");
  warn_split(config);

  TaskSweepResult result;
  result.config = config;
  result.grid = make_grid(config);
  result.records = run_jobs<TaskRecord>(config, result.grid, [&](TaskRecord& rec, const GridPoint& p) {
    rec.score = run_task_sample(config, p, rec.sample);
  });

  const auto samples = static_cast<std::size_t>(config.samples);
  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    std::vector<std::optional<double>> per_sample;
    for (std::size_t s = 0; s < samples; ++s)
      per_sample.push_back(result.records[g * samples + s].score);
    result.scores.push_back(summarize(std::move(per_sample)));
  }
  return result;
}

std::optional<double> downward_crossing(std::span<const double> horizons, std::span<const double> values,
                                        double threshold) {
  if (horizons.size() != values.size())
    throw ArgumentError("horizon grid and values differ in length");
  std::optional<std::size_t> prev;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (std::isnan(values[k]))
      continue;
    if (values[k] < threshold) {
      if (!prev)
        return horizons[k];
      const double frac = (values[*prev] - threshold) / (values[*prev] - values[k]);
      return horizons[*prev] + frac * (horizons[k] - horizons[*prev]);
    }
    prev = k;
  }
  return std::nullopt;
}

std::vector<std::optional<double>> run_mg_sample(const ExperimentConfig& config, const GridPoint& point,
                                                 int sample) {
  const SampleSeeds seeds = sample_seeds(config.master_seed, sample);
  const SpinChainSpec spec = sample_chain(config, point, seeds.disorder);
  const EvolutionPlan plan = make_plan(spec, point.tau, config.subintervals);

  const int washout = config.split.n_washout;
  const int n_train = config.split.n_train;
  const int warm = washout + n_train;
  const int horizon = config.horizons.back();

  // Each sample reads a different stretch of the attractor.
  int offset = 0;
  if (config.mg_offset_range > 0) {
    CounterRng rng(seeds.inputs);
    offset = static_cast<int>(rng.next() % static_cast<std::uint64_t>(config.mg_offset_range));
  }
  MgParams params = config.mg;
  params.delay = config.k_delta;
  const MgSequence seq = gen_mackey_glass(warm + horizon, params, config.mg_burn_in + offset);
  const std::span<const double> s(seq.normalized);

  Reservoir reservoir(plan, config.noise, seeds.noise);
  Eigen::MatrixXd train_rows(n_train, plan.features_per_step());
  Eigen::RowVectorXd row;
  for (int k = 0; k < warm; ++k) {
    row = reservoir.feed(s[k]);
    if (k >= washout)
      train_rows.row(k - washout) = row;
  }
  // The row after input k predicts input k+1.
  const ReadoutModel model = train(train_rows, s.subspan(washout + 1, n_train), config.ridge);
  const std::vector<double> predicted = continue_closed_loop(reservoir, model, row, horizon);

  const std::span<const double> truth = s.subspan(warm, horizon);
  const std::span<const double> pred(predicted);
  std::vector<std::optional<double>> out;
  for (int l : config.horizons)
    out.push_back(try_normalized_covariance(truth.first(l), pred.first(l)));
  return out;
}

MgSweepResult run_mg_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.experiment != Experiment::MG)
    throw ConfigError("MG sweep needs the mg task");
  warn_split(config);

  MgSweepResult result;
  result.config = config;
  result.grid = make_grid(config);
  result.records = run_jobs<MgRecord>(config, result.grid, [&](MgRecord& rec, const GridPoint& p) {
    rec.by_horizon = run_mg_sample(config, p, rec.sample);
  });

  const auto samples = static_cast<std::size_t>(config.samples);
  const std::vector<double> horizons(config.horizons.begin(), config.horizons.end());
  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    MgGridSummary summary;
    std::vector<double> means;
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      std::vector<std::optional<double>> per_sample;
      for (std::size_t s = 0; s < samples; ++s)
        per_sample.push_back(result.records[g * samples + s].by_horizon[h]);
      summary.by_horizon.push_back(summarize(std::move(per_sample)));
      means.push_back(summary.by_horizon.back().mean);
    }
    const auto crossing = downward_crossing(horizons, means, config.threshold);
    summary.censored = !crossing.has_value();
    summary.l_c = crossing.value_or(horizons.back());
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

OtocSweepResult run_otoc_sweep(const ExperimentConfig& config) {
  config.validate();
  if (config.experiment != Experiment::OTOC)
    throw ConfigError("OTOC sweep needs the otoc task");

  OtocSweepResult result;
  result.config = config;
  result.grid = make_grid(config);
  result.records = run_jobs<OtocRecord>(config, result.grid, [&](OtocRecord& rec, const GridPoint& p) {
    const OtocEvaluator otoc(sample_chain(config, p, rec.seed));
    rec.values.reserve(config.taus.size());
    for (double t : config.taus)
      rec.values.push_back(otoc(t));
    rec.tau_th = threshold_crossing(config.taus, rec.values, config.threshold);
  });

  const auto samples = static_cast<std::size_t>(config.samples);
  const std::size_t n_tau = config.taus.size();
  for (std::size_t g = 0; g < result.grid.size(); ++g) {
    OtocGridSummary summary;
    summary.mean.assign(n_tau, 0.0);
    summary.std_error.assign(n_tau, 0.0);
    std::vector<std::optional<double>> crossings;
    for (std::size_t s = 0; s < samples; ++s) {
      const OtocRecord& rec = result.records[g * samples + s];
      for (std::size_t t = 0; t < n_tau; ++t)
        summary.mean[t] += rec.values[t] / static_cast<double>(samples);
      crossings.push_back(rec.tau_th);
    }
    if (samples > 1)
      for (std::size_t t = 0; t < n_tau; ++t) {
        double ss = 0.0;
        for (std::size_t s = 0; s < samples; ++s) {
          const double dv = result.records[g * samples + s].values[t] - summary.mean[t];
          ss += dv * dv;
        }
        summary.std_error[t] = std::sqrt(ss / static_cast<double>(samples - 1) / static_cast<double>(samples));
      }
    summary.tau_th_of_mean = threshold_crossing(config.taus, summary.mean, config.threshold);
    summary.tau_th = summarize(std::move(crossings));
    result.summaries.push_back(std::move(summary));
  }
  return result;
}

} // namespace qrc
