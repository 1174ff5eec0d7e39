#pragma once

#include <vector>

namespace accelflow {

/// Tabulated strictly increasing map τ on [t₀, t_end] with τ(t₀) = 0.
///
/// Nodes carry both τ and τ̇, so evaluation between nodes is cubic Hermite.
/// The inverse brackets by bisection on the table and then solves the cubic
/// on the bracket.
class MonotoneMap {
public:
    MonotoneMap(std::vector<double> t, std::vector<double> tau, std::vector<double> tau_dot);

    double operator()(double t) const;
    double derivative(double t) const;
    double inverse(double u) const;

    double t_min() const noexcept { return t_.front(); }
    double t_max() const noexcept { return t_.back(); }
    double tau_max() const noexcept { return tau_.back(); }

    const std::vector<double>& nodes() const noexcept { return t_; }
    const std::vector<double>& values() const noexcept { return tau_; }

private:
    std::size_t bracket_t(double t) const;
    double hermite(std::size_t i, double t) const;
    double hermite_dot(std::size_t i, double t) const;

    std::vector<double> t_;
    std::vector<double> tau_;
    std::vector<double> tau_dot_;
};

} // namespace accelflow
