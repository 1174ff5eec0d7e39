#pragma once

#include "accelflow/problems.hpp"

#include <map>
#include <string>
#include <vector>

namespace accelflow {

/// Time-stamped samples. `points` is the primary series (x_k for iterations,
/// X(t) for flows); `aux` holds extra vector series such as y_k, z_k or Z(t);
/// `channels` holds named scalar series (energy, restart flags, …).
struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> points;
    std::vector<double> f_values;
    std::map<std::string, std::vector<double>> channels;
    std::map<std::string, std::vector<Vector>> aux;

    std::size_t size() const noexcept { return times.size(); }
    int dim() const noexcept { return points.empty() ? 0 : static_cast<int>(points.front().size()); }

    void push(double t, Vector x, double f);

    /// Throws ArgumentError when series lengths differ or times are not
    /// strictly increasing.
    void validate() const;

    /// Trajectory whose primary series is `aux[name]`, with f re-evaluated.
    Trajectory with_primary(const std::string& name, const Objective& f) const;
};

} // namespace accelflow
