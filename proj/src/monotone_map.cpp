#include "accelflow/monotone_map.hpp"

#include "accelflow/error.hpp"

#include <algorithm>
#include <cmath>

namespace accelflow {

MonotoneMap::MonotoneMap(std::vector<double> t, std::vector<double> tau, std::vector<double> tau_dot)
    : t_(std::move(t)), tau_(std::move(tau)), tau_dot_(std::move(tau_dot)) {
    if (t_.size() < 2 || tau_.size() != t_.size() || tau_dot_.size() != t_.size()) {
        throw ArgumentError("MonotoneMap: need at least two nodes with matching tables");
    }
    for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
        if (!(t_[i + 1] > t_[i])) {
            throw ArgumentError("MonotoneMap: grid must be strictly increasing");
        }
        if (!(tau_[i + 1] > tau_[i])) {
            throw DomainError("MonotoneMap: tau must be strictly increasing");
        }
    }
    for (double d : tau_dot_) {
        if (!(d > 0.0)) {
            throw DomainError("MonotoneMap: tau derivative must be positive");
        }
    }
}

std::size_t MonotoneMap::bracket_t(double t) const {
    if (t < t_.front() || t > t_.back()) {
        throw DomainError("MonotoneMap: time outside tabulated range");
    }
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = static_cast<std::size_t>(std::distance(t_.begin(), it));
    return std::min(i == 0 ? 0 : i - 1, t_.size() - 2);
}

double MonotoneMap::hermite(std::size_t i, double t) const {
    const double dt = t_[i + 1] - t_[i];
    const double s = (t - t_[i]) / dt;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * tau_[i] + (s3 - 2 * s2 + s) * dt * tau_dot_[i] +
           (-2 * s3 + 3 * s2) * tau_[i + 1] + (s3 - s2) * dt * tau_dot_[i + 1];
}

double MonotoneMap::hermite_dot(std::size_t i, double t) const {
    const double dt = t_[i + 1] - t_[i];
    const double s = (t - t_[i]) / dt;
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * tau_[i] + (-6 * s2 + 6 * s) * tau_[i + 1]) / dt +
           (3 * s2 - 4 * s + 1) * tau_dot_[i] + (3 * s2 - 2 * s) * tau_dot_[i + 1];
}

double MonotoneMap::operator()(double t) const { return hermite(bracket_t(t), t); }

double MonotoneMap::derivative(double t) const { return hermite_dot(bracket_t(t), t); }

double MonotoneMap::inverse(double u) const {
    if (u < tau_.front() || u > tau_.back()) {
        throw DomainError("MonotoneMap: value outside the range of tau");
    }
    auto it = std::upper_bound(tau_.begin(), tau_.end(), u);
    std::size_t i = static_cast<std::size_t>(std::distance(tau_.begin(), it));
    i = std::min(i == 0 ? 0 : i - 1, t_.size() - 2);

    // Safeguarded Newton on the bracket; falls back to bisection when a step
    // leaves [lo, hi] or the cubic is locally flat.
    double lo = t_[i];
    double hi = t_[i + 1];
    double t = lo + (hi - lo) * (u - tau_[i]) / (tau_[i + 1] - tau_[i]);
    for (int iter = 0; iter < 100; ++iter) {
        const double r = hermite(i, t) - u;
        if (r > 0.0) {
            hi = t;
        } else {
            lo = t;
        }
        if (r == 0.0 || hi - lo <= 1e-15 * std::max(1.0, std::abs(t))) {
            break;
        }
        const double d = hermite_dot(i, t);
        double next = d > 0.0 ? t - r / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - t) <= 1e-16 * std::max(1.0, std::abs(t))) {
            t = next;
            break;
        }
        t = next;
    }
    return t;
}

} // namespace accelflow
