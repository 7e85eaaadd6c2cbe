// config.hpp - experiment configuration, presets and the key/value file format
//
// Config files hold one `key = value` pair per line. `#` starts a comment;
// list values are comma separated. Unknown keys are errors. Recognized keys:
//
//   task            stm | pc | mg | otoc (must match the subcommand if given)
//   n_qubits        N
//   coupling        J0
//   alpha           list of coupling exponents
//   field           B
//   disorder        list of disorder widths W
//   w_c             optional normalization constant for W (reported as W/W_c)
//   tau             list of step durations (OTOC: the time grid)
//   subintervals    V
//   k_delta         task delay (STM/PC window, MG delay)
//   washout, train, test
//   horizons        list of closed-loop horizons (MG)
//   samples         samples per grid point
//   seed            master seed
//   noise           signal noise half-width sigma
//   ridge           readout ridge penalty
//   threshold       OTOC crossing threshold or MG l_c threshold
//   mg_gamma, mg_beta, mg_lambda, mg_burn_in, mg_offset_range
//   workers         worker threads
//   out             CSV output path
//   timing          true | false (record wall_ms)

#pragma once

#include "qrc/readout.hpp"
#include "qrc/tasks.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qrc {

enum class Experiment { STM, PC, MG, OTOC };
enum class PresetScale { Desk, Paper };

std::string_view experiment_name(Experiment e);
/// Throws ConfigError for unknown names.
Experiment parse_experiment(std::string_view name);
PresetScale parse_preset(std::string_view name);

struct ExperimentConfig {
  Experiment experiment = Experiment::STM;
  int n_qubits = 7;
  double coupling = 1.0;
  std::vector<double> alphas{0.4};
  double field = 4.0;
  std::vector<double> disorders{1.0};
  std::optional<double> w_c;
  std::vector<double> taus{1.0};
  int subintervals = 10;
  int k_delta = 8;
  SplitPlan split{500, 1500, 500};
  std::vector<int> horizons;
  int samples = 20;
  std::uint64_t master_seed = 1;
  double noise = 0.0;
  double ridge = 0.0;
  double threshold = 0.5;
  MgParams mg;
  int mg_burn_in = 1000;
  int mg_offset_range = 1000;
  int workers = 1;
  std::string out;
  bool timing = false;

  /// Throws ConfigError when a module precondition would be violated.
  void validate() const;

  /// Key/value representation, in the file format above.
  std::map<std::string, std::string> to_map() const;
};

ExperimentConfig preset_config(Experiment experiment, PresetScale scale);

/// Applies a single key/value pair. Throws ConfigError.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Applies every line of a config text. Throws ConfigError with line numbers.
void apply_config_text(ExperimentConfig& config, std::string_view text);
void apply_config_file(ExperimentConfig& config, const std::string& path);

std::string to_config_text(const ExperimentConfig& config);

} // namespace qrc
