#pragma once

#include "accelflow/flows.hpp"
#include "accelflow/problems.hpp"

#include <array>
#include <cmath>
#include <random>

namespace oracle {

using accelflow::Vector;

inline Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) {
        v[i++] = x;
    }
    return v;
}

inline accelflow::Objective paper2d(double L = 1.0, double mu = 0.0) {
    const std::array<double, 2> c{0.02, 0.005};
    return accelflow::make_diag_quadratic(c).with_parameters(L, mu);
}

inline accelflow::Objective restart2d() {
    const std::array<double, 2> c{0.5, 0.49};
    return accelflow::make_diag_quadratic(c);
}

// f = ½λx² in one dimension.
inline accelflow::Objective scalar_quadratic(double lambda) {
    const std::array<double, 1> c{0.5 * lambda};
    return accelflow::make_diag_quadratic(c).with_parameters(std::max(lambda, 1e-12), 0.0);
}

inline double gradient_flow_solution(double lambda, double x0, double t) { return x0 * std::exp(-lambda * t); }

inline double bregman_by_definition(const accelflow::MirrorMap& g, const Vector& y, const Vector& x) {
    return g.value(y) - g.value(x) - g.gradient(x).dot(y - x);
}

inline Vector random_vector(std::mt19937_64& rng, int n, double scale = 1.0) {
    std::normal_distribution<double> nd(0.0, scale);
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = nd(rng);
    }
    return v;
}

// Ẍ implied by a packed [X; ∇g(Z)] model with Euclidean g, at Ẋ = V:
// Z = X + e^{−α}V, Ẍ = e^{α}(Ż − Ẋ) + α̇Ẋ.
inline Vector implied_acceleration(const accelflow::FlowModel& m, double t, const Vector& X, const Vector& V) {
    const auto& sc = *m.scaling();
    const int d = static_cast<int>(X.size());
    Vector state(2 * d);
    state << X, X + std::exp(-sc.alpha(t)) * V;
    const Vector r = m.rhs(t, state);
    return sc.exp_alpha(t) * (r.tail(d) - r.head(d)) + sc.alpha_dot(t) * r.head(d);
}

inline Vector acceleration(const accelflow::FlowModel& m, double t, const Vector& X, const Vector& V) {
    const int d = static_cast<int>(X.size());
    Vector state(2 * d);
    state << X, V;
    return m.rhs(t, state).tail(d);
}

} // namespace oracle
