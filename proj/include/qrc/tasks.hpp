// tasks.hpp - input and target sequences for the benchmark tasks
//
// Sequences are 0-based in memory: element k holds step k+1. Inputs before
// the first step are treated as 0.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace qrc {

enum class TaskKind { STM, PC, MG };

std::string_view task_name(TaskKind kind);

/// i.i.d. fair bits, deterministic in seed.
std::vector<double> gen_binary_inputs(int length, std::uint64_t seed);

/// target_k = s_{k - delay}.
std::vector<double> stm_targets(const std::vector<double>& inputs, int delay);

/// target_k = (s_k + s_{k-1} + ... + s_{k-delay}) mod 2. Throws ArgumentError
/// on non-binary inputs.
std::vector<double> pc_targets(const std::vector<double>& inputs, int delay);

struct MgParams {
  double gamma = 0.9;
  double beta = 10.0;
  double lambda = 0.2;
  int delay = 17;
};

struct MgSequence {
  std::vector<double> raw;        ///< F_k over the window
  double f_min = 0.0;
  double f_max = 0.0;
  std::vector<double> normalized; ///< (F_k - F_min) / (F_max - F_min)
};

/// Iterates F_{k+1} = gamma F_k + lambda F_{k-d} / (1 + F_{k-d}^beta) from the
/// constant history F_j = 0.5 (j <= 0), drops the first `burn_in` steps and
/// keeps the next `length` values. Throws DegenerateError if the window is
/// flat to 1e-12.
MgSequence gen_mackey_glass(int length, const MgParams& params, int burn_in);

} // namespace qrc
