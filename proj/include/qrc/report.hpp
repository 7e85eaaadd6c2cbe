// report.hpp - CSV and JSON emission for sweep results
//
// Task sweeps: task,N,alpha,B,W,tau,V,k_delta,sample,seed,C,wall_ms
// MG sweeps:   the task columns plus l,l_c,censored, one row per horizon
// OTOC sweeps: N,alpha,W,tau,sample,O plus a <stem>_tau_th.csv summary
//
// Aggregates (mean, standard error, n) go to <stem>.json next to the CSV.
// wall_ms is "NA" unless timing is enabled, which keeps default output
// byte-identical between reruns.

#pragma once

#include "qrc/bench.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qrc {

std::string sibling_path(const std::string& csv_path, const std::string& suffix);

void write_csv(const TaskSweepResult& result, std::ostream& out);
void write_csv(const MgSweepResult& result, std::ostream& out);
void write_csv(const OtocSweepResult& result, std::ostream& out);
void write_tau_th_csv(const OtocSweepResult& result, std::ostream& out);

std::string summary_json(const TaskSweepResult& result);
std::string summary_json(const MgSweepResult& result);
std::string summary_json(const OtocSweepResult& result);

/// Writes the CSV at config.out plus its sibling files. Returns the paths written.
std::vector<std::string> write_outputs(const TaskSweepResult& result);
std::vector<std::string> write_outputs(const MgSweepResult& result);
std::vector<std::string> write_outputs(const OtocSweepResult& result);

} // namespace qrc
