#include "qrc/tasks.hpp"

#include "qrc/errors.hpp"
#include "qrc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace qrc {

std::string_view task_name(TaskKind kind) {
  switch (kind) {
  case TaskKind::STM:
    return "stm";
  case TaskKind::PC:
    return "pc";
  case TaskKind::MG:
    return "mg";
  }
  return "?";
}

std::vector<double> gen_binary_inputs(int length, std::uint64_t seed) {
  if (length < 1)
    throw ArgumentError("input length must be >= 1");
  CounterRng rng(seed);
  std::vector<double> bits(static_cast<std::size_t>(length));
  for (auto& b : bits)
    b = rng.bit();
  return bits;
}

std::vector<double> stm_targets(const std::vector<double>& inputs, int delay) {
  if (delay < 0)
    throw ArgumentError("delay must be >= 0");
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
  std::vector<double> out(inputs.size(), 0.0);
  for (std::ptrdiff_t k = delay; k < n; ++k)
    out[k] = inputs[k - delay];
  return out;
}

std::vector<double> pc_targets(const std::vector<double>& inputs, int delay) {
  if (delay < 0)
    throw ArgumentError("delay must be >= 0");
  for (double s : inputs)
    if (s != 0.0 && s != 1.0)
      throw ArgumentError("parity check needs binary inputs, got " + std::to_string(s));

  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
  std::vector<double> out(inputs.size(), 0.0);
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    int ones = 0;
    for (std::ptrdiff_t m = 0; m <= delay && k - m >= 0; ++m)
      ones += inputs[k - m] != 0.0;
    out[k] = ones % 2;
  }
  return out;
}

MgSequence gen_mackey_glass(int length, const MgParams& params, int burn_in) {
  if (length < 1)
    throw ArgumentError("sequence length must be >= 1");
  if (burn_in < 0)
    throw ArgumentError("burn-in must be >= 0");
  if (!(params.gamma > 0.0 && params.gamma < 1.0) || !(params.lambda >= 0.0) ||
      !(params.beta > 0.0) || params.delay < 0)
    throw ArgumentError("Mackey-Glass parameters out of range");

  // history.front() is F_{k-d}, history.back() is F_k.
  std::deque<double> history(static_cast<std::size_t>(params.delay) + 1, 0.5);
  MgSequence seq;
  seq.raw.reserve(static_cast<std::size_t>(length));
  const long total = static_cast<long>(burn_in) + length;
  for (long k = 0; k < total; ++k) {
    const double lagged = history.front();
    const double next =
        params.gamma * history.back() + params.lambda * lagged / (1.0 + std::pow(lagged, params.beta));
    history.pop_front();
    history.push_back(next);
    if (k >= burn_in)
      seq.raw.push_back(next);
  }

  const auto [lo, hi] = std::minmax_element(seq.raw.begin(), seq.raw.end());
  seq.f_min = *lo;
  seq.f_max = *hi;
  const double span = seq.f_max - seq.f_min;
  if (span < 1e-12)
    throw DegenerateError("Mackey-Glass window is flat (F_max - F_min < 1e-12)");
  seq.normalized.reserve(seq.raw.size());
  for (double f : seq.raw)
    seq.normalized.push_back((f - seq.f_min) / span);
  return seq;
}

} // namespace qrc
