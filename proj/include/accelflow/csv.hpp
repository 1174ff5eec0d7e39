#pragma once

#include "accelflow/trajectory.hpp"

#include <string>
#include <vector>

namespace accelflow {

/// 17 significant digits, shortest exponent form where needed.
std::string format_double(double value);

/// `k,t,x_0,...,x_{n-1},f` plus `energy` and `restart` when the trajectory
/// carries those channels.
std::string trajectory_csv(const Trajectory& traj);

struct MetricRow {
    std::string pair;
    int window_lo = 0;
    int window_hi = 0;
    double mean_err_ref = 0.0;
    double mean_err_cand = 0.0;
    double reduction_pct = 0.0;
};

std::string metrics_csv(const std::vector<MetricRow>& rows);

/// Generic numeric table with a header row.
std::string table_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

/// Writes `content` to `path` (LF line endings as given). Throws IoError.
void write_text_file(const std::string& path, const std::string& content);

} // namespace accelflow
