#include "qrc/report.hpp"

#include "qrc/errors.hpp"
#include "qrc/format.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qrc {

namespace {

using nlohmann::ordered_json;

ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

ordered_json num(const std::optional<double>& x) { return x ? num(*x) : ordered_json(nullptr); }

std::string wall(const ExperimentConfig& c, double ms) { return c.timing ? format_number(ms) : "NA"; }

ordered_json config_json(const ExperimentConfig& config) {
  ordered_json j = ordered_json::object();
  // Worker count only affects scheduling, never the results.
  for (const auto& [k, v] : config.to_map())
    if (k != "workers")
      j[k] = v;
  return j;
}

ordered_json score_json(const Score& s) {
  return {{"mean", num(s.mean)}, {"std_error", num(s.std_error)}, {"n", s.n}, {"n_degenerate", s.n_degenerate}};
}

ordered_json point_json(const ExperimentConfig& c, const GridPoint& p, bool with_tau) {
  ordered_json j = {{"W", p.disorder}};
  if (c.w_c)
    j["W_over_WC"] = p.disorder / *c.w_c;
  j["alpha"] = p.alpha;
  if (with_tau)
    j["tau"] = p.tau;
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open output file '" + path + "'");
  out << content;
  if (!out)
    throw ConfigError("failed writing '" + path + "'");
}

template <class Writer>
std::string render(Writer&& w) {
  std::ostringstream out;
  w(out);
  return out.str();
}

void task_columns(std::ostream& out, const ExperimentConfig& c, const GridPoint& p) {
  out << experiment_name(c.experiment) << ',' << c.n_qubits << ',' << format_number(p.alpha) << ','
      << format_number(c.field) << ',' << format_number(p.disorder) << ',' << format_number(p.tau) << ','
      << c.subintervals << ',' << c.k_delta;
}

} // namespace

std::string sibling_path(const std::string& csv_path, const std::string& suffix) {
  std::filesystem::path p(csv_path);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + suffix)).string();
}

void write_csv(const TaskSweepResult& r, std::ostream& out) {
  out << "task,N,alpha,B,W,tau,V,k_delta,sample,seed,C,wall_ms\n";
  for (const auto& rec : r.records) {
    task_columns(out, r.config, r.grid[rec.grid]);
    out << ',' << rec.sample << ',' << rec.seed << ',' << format_number(rec.score) << ','
        << wall(r.config, rec.wall_ms) << '\n';
  }
}

void write_csv(const MgSweepResult& r, std::ostream& out) {
  out << "task,N,alpha,B,W,tau,V,k_delta,sample,seed,C,wall_ms,l,l_c,censored\n";
  for (const auto& rec : r.records) {
    const MgGridSummary& summary = r.summaries[rec.grid];
    for (std::size_t h = 0; h < r.config.horizons.size(); ++h) {
      task_columns(out, r.config, r.grid[rec.grid]);
      out << ',' << rec.sample << ',' << rec.seed << ',' << format_number(rec.by_horizon[h]) << ','
          << wall(r.config, rec.wall_ms) << ',' << r.config.horizons[h] << ',' << format_number(summary.l_c)
          << ',' << (summary.censored ? "true" : "false") << '\n';
    }
  }
}

void write_csv(const OtocSweepResult& r, std::ostream& out) {
  out << "N,alpha,W,tau,sample,O\n";
  for (const auto& rec : r.records) {
    const GridPoint& p = r.grid[rec.grid];
    for (std::size_t t = 0; t < r.config.taus.size(); ++t)
      out << r.config.n_qubits << ',' << format_number(p.alpha) << ',' << format_number(p.disorder) << ','
          << format_number(r.config.taus[t]) << ',' << rec.sample << ',' << format_number(rec.values[t])
          << '\n';
  }
}

void write_tau_th_csv(const OtocSweepResult& r, std::ostream& out) {
  out << "N,alpha,W,sample,seed,tau_th,censored\n";
  for (const auto& rec : r.records) {
    const GridPoint& p = r.grid[rec.grid];
    out << r.config.n_qubits << ',' << format_number(p.alpha) << ',' << format_number(p.disorder) << ','
        << rec.sample << ',' << rec.seed << ',' << format_number(rec.tau_th) << ','
        << (rec.tau_th ? "false" : "true") << '\n';
  }
}

std::string summary_json(const TaskSweepResult& r) {
  ordered_json j;
  j["task"] = experiment_name(r.config.experiment);
  j["config"] = config_json(r.config);
  j["n_degenerate"] = r.n_degenerate();
  ordered_json grid = ordered_json::array();
  for (std::size_t g = 0; g < r.grid.size(); ++g) {
    ordered_json e = point_json(r.config, r.grid[g], true);
    e.update(score_json(r.scores[g]));
    grid.push_back(std::move(e));
  }
  j["grid"] = std::move(grid);
  return j.dump(2) + "\n";
}

std::string summary_json(const MgSweepResult& r) {
  ordered_json j;
  j["task"] = "mg";
  j["config"] = config_json(r.config);
  ordered_json grid = ordered_json::array();
  for (std::size_t g = 0; g < r.grid.size(); ++g) {
    const MgGridSummary& s = r.summaries[g];
    ordered_json e = point_json(r.config, r.grid[g], true);
    e["l_c"] = s.l_c;
    e["censored"] = s.censored;
    ordered_json curve = ordered_json::array();
    for (std::size_t h = 0; h < r.config.horizons.size(); ++h) {
      ordered_json c = {{"l", r.config.horizons[h]}};
      c.update(score_json(s.by_horizon[h]));
      curve.push_back(std::move(c));
    }
    e["curve"] = std::move(curve);
    grid.push_back(std::move(e));
  }
  j["grid"] = std::move(grid);
  return j.dump(2) + "\n";
}

std::string summary_json(const OtocSweepResult& r) {
  ordered_json j;
  j["task"] = "otoc";
  j["config"] = config_json(r.config);
  ordered_json grid = ordered_json::array();
  for (std::size_t g = 0; g < r.grid.size(); ++g) {
    const OtocGridSummary& s = r.summaries[g];
    ordered_json e = point_json(r.config, r.grid[g], false);
    e["tau_th_of_mean"] = num(s.tau_th_of_mean);
    e["tau_th"] = {{"mean", num(s.tau_th.mean)},
                   {"std_error", num(s.tau_th.std_error)},
                   {"n", s.tau_th.n},
                   {"n_censored", s.tau_th.n_degenerate}};
    ordered_json curve = ordered_json::array();
    for (std::size_t t = 0; t < r.config.taus.size(); ++t)
      curve.push_back({{"tau", r.config.taus[t]}, {"mean", s.mean[t]}, {"std_error", s.std_error[t]},
                       {"n", r.config.samples}});
    e["curve"] = std::move(curve);
    grid.push_back(std::move(e));
  }
  j["grid"] = std::move(grid);
  return j.dump(2) + "\n";
}

std::vector<std::string> write_outputs(const TaskSweepResult& r) {
  const std::string json_path = sibling_path(r.config.out, ".json");
  write_file(r.config.out, render([&](std::ostream& o) { write_csv(r, o); }));
  write_file(json_path, summary_json(r));
  return {r.config.out, json_path};
}

std::vector<std::string> write_outputs(const MgSweepResult& r) {
  const std::string json_path = sibling_path(r.config.out, ".json");
  write_file(r.config.out, render([&](std::ostream& o) { write_csv(r, o); }));
  write_file(json_path, summary_json(r));
  return {r.config.out, json_path};
}

std::vector<std::string> write_outputs(const OtocSweepResult& r) {
  const std::string json_path = sibling_path(r.config.out, ".json");
  const std::string tau_path = sibling_path(r.config.out, "_tau_th.csv");
  write_file(r.config.out, render([&](std::ostream& o) { write_csv(r, o); }));
  write_file(tau_path, render([&](std::ostream& o) { write_tau_th_csv(r, o); }));
  write_file(json_path, summary_json(r));
  return {r.config.out, tau_path, json_path};
}

} // namespace qrc
