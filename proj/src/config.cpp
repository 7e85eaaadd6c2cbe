#include "qrc/config.hpp"

#include "qrc/errors.hpp"
#include "qrc/format.hpp"
#include "qrc/qstate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qrc {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = s.find(',');
    parts.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view what) {
  throw ConfigError("invalid value '" + std::string(value) + "' for '" + std::string(key) +
                    "': expected " + std::string(what));
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto res = std::from_chars(value.data(), end, out);
  if (value.empty() || res.ec != std::errc() || res.ptr != end)
    bad_value(key, value, "a number");
  return out;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out = 0;
  const auto* end = value.data() + value.size();
  const auto res = std::from_chars(value.data(), end, out);
  if (value.empty() || res.ec != std::errc() || res.ptr != end)
    bad_value(key, value, "an integer");
  return out;
}

std::vector<double> parse_doubles(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (auto part : split_list(value))
    out.push_back(parse_double(key, part));
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes")
    return true;
  if (value == "false" || value == "0" || value == "no")
    return false;
  bad_value(key, value, "true or false");
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k)
      out += ',';
    if constexpr (std::is_floating_point_v<T>)
      out += format_number(xs[k]);
    else
      out += std::to_string(xs[k]);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok)
    throw ConfigError(message);
}

bool strictly_increasing(const auto& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](auto a, auto b) { return !(b > a); }) == xs.end();
}

} // namespace

std::string_view experiment_name(Experiment e) {
  switch (e) {
  case Experiment::STM:
    return "stm";
  case Experiment::PC:
    return "pc";
  case Experiment::MG:
    return "mg";
  case Experiment::OTOC:
    return "otoc";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  if (name == "stm")
    return Experiment::STM;
  if (name == "pc")
    return Experiment::PC;
  if (name == "mg")
    return Experiment::MG;
  if (name == "otoc")
    return Experiment::OTOC;
  throw ConfigError("unknown task '" + std::string(name) + "'");
}

PresetScale parse_preset(std::string_view name) {
  if (name == "desk")
    return PresetScale::Desk;
  if (name == "paper")
    return PresetScale::Paper;
  throw ConfigError("unknown preset '" + std::string(name) + "' (expected desk or paper)");
}

void ExperimentConfig::validate() const {
  require(n_qubits >= 2 && n_qubits <= kMaxQubits,
          "n_qubits must be in [2, " + std::to_string(kMaxQubits) + "]");
  require(std::isfinite(coupling) && std::isfinite(field), "coupling and field must be finite");
  require(!alphas.empty(), "alpha list is empty");
  for (double a : alphas)
    require(a >= 0.0, "alpha must be >= 0");
  require(!disorders.empty(), "disorder list is empty");
  for (double w : disorders)
    require(w >= 0.0, "disorder must be >= 0");
  if (w_c)
    require(*w_c > 0.0, "w_c must be > 0");
  require(!taus.empty(), "tau list is empty");
  require(samples >= 1, "samples must be >= 1");
  require(workers >= 1, "workers must be >= 1");
  require(noise >= 0.0, "noise must be >= 0");
  require(ridge >= 0.0, "ridge must be >= 0");
  require(split.n_washout >= 0 && split.n_train >= 0 && split.n_test >= 0,
          "split sizes must be >= 0");

  if (experiment == Experiment::OTOC) {
    for (double t : taus)
      require(t >= 0.0, "OTOC time grid must be >= 0");
    require(strictly_increasing(taus), "OTOC time grid must be strictly increasing");
    return;
  }

  for (double t : taus)
    require(t > 0.0, "tau must be > 0");
  require(subintervals >= 1, "subintervals must be >= 1");
  require(k_delta >= 0, "k_delta must be >= 0");
  require(split.n_train >= 1, "train must be >= 1");

  if (experiment == Experiment::MG) {
    require(!horizons.empty(), "MG needs a horizon list");
    require(horizons.front() >= 2, "MG horizons must be >= 2");
    require(strictly_increasing(horizons), "MG horizons must be strictly increasing");
    require(mg.gamma > 0.0 && mg.gamma < 1.0, "mg_gamma must be in (0, 1)");
    require(mg.lambda > 0.0, "mg_lambda must be > 0");
    require(mg.beta > 0.0, "mg_beta must be > 0");
    require(mg_burn_in >= 0 && mg_offset_range >= 0, "mg_burn_in and mg_offset_range must be >= 0");
  } else {
    require(split.n_test >= 2, "test must be >= 2");
  }
}

std::map<std::string, std::string> ExperimentConfig::to_map() const {
  std::map<std::string, std::string> m;
  m["task"] = experiment_name(experiment);
  m["n_qubits"] = std::to_string(n_qubits);
  m["coupling"] = format_number(coupling);
  m["alpha"] = join(alphas);
  m["field"] = format_number(field);
  m["disorder"] = join(disorders);
  if (w_c)
    m["w_c"] = format_number(*w_c);
  m["tau"] = join(taus);
  m["subintervals"] = std::to_string(subintervals);
  m["k_delta"] = std::to_string(k_delta);
  m["washout"] = std::to_string(split.n_washout);
  m["train"] = std::to_string(split.n_train);
  m["test"] = std::to_string(split.n_test);
  if (!horizons.empty())
    m["horizons"] = join(horizons);
  m["samples"] = std::to_string(samples);
  m["seed"] = std::to_string(master_seed);
  m["noise"] = format_number(noise);
  m["ridge"] = format_number(ridge);
  m["threshold"] = format_number(threshold);
  m["mg_gamma"] = format_number(mg.gamma);
  m["mg_beta"] = format_number(mg.beta);
  m["mg_lambda"] = format_number(mg.lambda);
  m["mg_burn_in"] = std::to_string(mg_burn_in);
  m["mg_offset_range"] = std::to_string(mg_offset_range);
  m["workers"] = std::to_string(workers);
  m["out"] = out;
  m["timing"] = timing ? "true" : "false";
  return m;
}

ExperimentConfig preset_config(Experiment experiment, PresetScale scale) {
  ExperimentConfig c;
  c.experiment = experiment;
  c.field = 4.0;
  c.coupling = 1.0;
  c.subintervals = 10;
  c.out = std::string(experiment_name(experiment)) + ".csv";
  const bool desk = scale == PresetScale::Desk;

  switch (experiment) {
  case Experiment::STM:
  case Experiment::PC:
    c.n_qubits = desk ? 7 : 10;
    c.alphas = {0.4};
    c.disorders = {0.5, 2.0, 8.0, 16.0, 32.0};
    c.split = desk ? SplitPlan{500, 1500, 500} : SplitPlan{1000, 3000, 1000};
    c.samples = desk ? 20 : 100;
    c.threshold = 0.5;
    if (experiment == Experiment::STM) {
      c.k_delta = desk ? 8 : 16;
      c.taus = {2.0};
    } else {
      c.k_delta = desk ? 2 : 4;
      c.taus = {1.0};
    }
    break;
  case Experiment::MG:
    c.n_qubits = desk ? 8 : 10;
    c.alphas = {0.8};
    c.taus = {2.0};
    c.disorders = {4.0};
    c.k_delta = 17;
    c.split = desk ? SplitPlan{1000, 3000, 0} : SplitPlan{1000, 10000, 0};
    c.horizons = {2, 3, 5, 8, 10, 15, 20, 30, 40, 60, 80, 100};
    c.samples = desk ? 10 : 300;
    c.noise = 1e-6;
    c.threshold = 0.5;
    break;
  case Experiment::OTOC:
    c.n_qubits = desk ? 8 : 10;
    c.alphas = {0.4};
    c.disorders = desk ? std::vector<double>{4.0} : std::vector<double>{1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    c.taus = {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0};
    c.samples = desk ? 20 : 100;
    c.threshold = 0.2;
    break;
  }
  return c;
}

void apply_setting(ExperimentConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "task") {
    const Experiment e = parse_experiment(value);
    if (e != c.experiment)
      throw ConfigError("config task '" + std::string(value) + "' does not match the subcommand '" +
                        std::string(experiment_name(c.experiment)) + "'");
  } else if (key == "n_qubits") {
    c.n_qubits = parse_int<int>(key, value);
  } else if (key == "coupling") {
    c.coupling = parse_double(key, value);
  } else if (key == "alpha") {
    c.alphas = parse_doubles(key, value);
  } else if (key == "field") {
    c.field = parse_double(key, value);
  } else if (key == "disorder") {
    c.disorders = parse_doubles(key, value);
  } else if (key == "w_c") {
    c.w_c = parse_double(key, value);
  } else if (key == "tau") {
    c.taus = parse_doubles(key, value);
  } else if (key == "subintervals") {
    c.subintervals = parse_int<int>(key, value);
  } else if (key == "k_delta") {
    c.k_delta = parse_int<int>(key, value);
    c.mg.delay = c.k_delta;
  } else if (key == "washout") {
    c.split.n_washout = parse_int<int>(key, value);
  } else if (key == "train") {
    c.split.n_train = parse_int<int>(key, value);
  } else if (key == "test") {
    c.split.n_test = parse_int<int>(key, value);
  } else if (key == "horizons") {
    c.horizons.clear();
    for (auto part : split_list(value))
      c.horizons.push_back(parse_int<int>(key, part));
  } else if (key == "samples") {
    c.samples = parse_int<int>(key, value);
  } else if (key == "seed") {
    c.master_seed = parse_int<std::uint64_t>(key, value);
  } else if (key == "noise") {
    c.noise = parse_double(key, value);
  } else if (key == "ridge") {
    c.ridge = parse_double(key, value);
  } else if (key == "threshold") {
    c.threshold = parse_double(key, value);
  } else if (key == "mg_gamma") {
    c.mg.gamma = parse_double(key, value);
  } else if (key == "mg_beta") {
    c.mg.beta = parse_double(key, value);
  } else if (key == "mg_lambda") {
    c.mg.lambda = parse_double(key, value);
  } else if (key == "mg_burn_in") {
    c.mg_burn_in = parse_int<int>(key, value);
  } else if (key == "mg_offset_range") {
    c.mg_offset_range = parse_int<int>(key, value);
  } else if (key == "workers") {
    c.workers = parse_int<int>(key, value);
  } else if (key == "out") {
    c.out = std::string(value);
  } else if (key == "timing") {
    c.timing = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = line;
    if (const auto hash = sv.find('#'); hash != std::string_view::npos)
      sv = sv.substr(0, hash);
    sv = trim(sv);
    if (sv.empty())
      continue;
    const auto eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    try {
      apply_setting(config, trim(sv.substr(0, eq)), sv.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
}

std::string to_config_text(const ExperimentConfig& config) {
  std::string out;
  for (const auto& [k, v] : config.to_map())
    out += k + " = " + v + "\n";
  return out;
}

} // namespace qrc
