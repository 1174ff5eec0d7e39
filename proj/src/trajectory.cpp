#include "accelflow/trajectory.hpp"

#include "accelflow/error.hpp"

namespace accelflow {

void Trajectory::push(double t, Vector x, double f) {
    times.push_back(t);
    points.push_back(std::move(x));
    f_values.push_back(f);
}

void Trajectory::validate() const {
    const std::size_t n = times.size();
    if (points.size() != n || f_values.size() != n) {
        throw ArgumentError("trajectory: series lengths differ");
    }
    for (const auto& [name, series] : channels) {
        if (series.size() != n) {
            throw ArgumentError("trajectory: channel '" + name + "' has wrong length");
        }
    }
    for (const auto& [name, series] : aux) {
        if (series.size() != n) {
            throw ArgumentError("trajectory: aux series '" + name + "' has wrong length");
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(times[i] > times[i - 1])) {
            throw ArgumentError("trajectory: times are not strictly increasing");
        }
    }
}

Trajectory Trajectory::with_primary(const std::string& name, const Objective& f) const {
    auto it = aux.find(name);
    if (it == aux.end()) {
        throw ArgumentError("trajectory has no series '" + name + "'");
    }
    Trajectory out;
    out.times = times;
    out.points = it->second;
    out.f_values.reserve(out.points.size());
    for (const Vector& p : out.points) {
        out.f_values.push_back(f.value(p));
    }
    return out;
}

} // namespace accelflow
