#include "accelflow/lyapunov.hpp"

#include "accelflow/error.hpp"

#include <cmath>

namespace accelflow {

double energy_general(const Vector& X, const Vector& Z, double t, const Objective& f, const MirrorMap& g,
                      const ScalarFn& beta, double mu) {
    if (!(mu >= 0.0)) {
        throw ArgumentError("energy: mu must be non-negative");
    }
    if (X.size() != Z.size() || X.size() != f.dim()) {
        throw ArgumentError("energy: dimension mismatch");
    }
    const double D = bregman_divergence(g, Vector::Zero(Z.size()), Z);
    const double gap = f.value(X) - f.f_star();
    const double eb = std::exp(beta(t));
    if (mu == 0.0) {
        return D + (eb == 0.0 ? 0.0 : eb * gap);
    }
    return eb * (mu * D + gap);
}

double energy_single(const Vector& Z, double t, const Objective& f, const MirrorMap& g, const ScalarFn& beta,
                     double mu) {
    return energy_general(Z, Z, t, f, g, beta, mu);
}

EnergyTrace certify(const Trajectory& traj, const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                    double mu, EnergyForm form, double tol_rel) {
    auto zit = traj.aux.find("Z");
    if (zit == traj.aux.end()) {
        throw ArgumentError("certify: trajectory carries no Z series");
    }
    const std::vector<Vector>& Z = zit->second;
    if (Z.size() != traj.size()) {
        throw ArgumentError("certify: Z series length differs from the trajectory");
    }
    EnergyTrace out;
    const std::size_t n = traj.size();
    out.times = traj.times;
    out.energy.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = traj.times[i];
        const Vector& x = form == EnergyForm::Single ? Z[i] : traj.points[i];
        out.energy.push_back(energy_general(x, Z[i], t, f, g, scaling.beta, mu));
        out.objective_gap.push_back(f.value(x) - f.f_star());
    }
    const double E0 = n > 0 ? out.energy.front() : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = traj.times[i];
        const double b = std::exp(-scaling.beta(t)) * E0;
        out.bound.push_back(b);
        if (i > 0) {
            const double rise = out.energy[i] - out.energy[i - 1];
            if (rise > tol_rel * (1.0 + std::abs(out.energy[i - 1]))) {
                out.monotonicity.push_back({i, t, rise});
            }
        }
        if (std::isfinite(b) && out.objective_gap[i] > b * (1.0 + tol_rel)) {
            out.rate.push_back({i, t, out.objective_gap[i] - b});
        }
    }
    return out;
}

} // namespace accelflow
