#include "accelflow/integrate.hpp"

#include "accelflow/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace accelflow {

namespace {

bool healthy(const Vector& y) { return y.allFinite() && y.norm() <= kDivergenceNorm; }

Vector rk4_step(const FlowModel& m, double t, const Vector& y, double dt) {
    const Vector k1 = m.rhs(t, y);
    const Vector k2 = m.rhs(t + 0.5 * dt, y + (0.5 * dt) * k1);
    const Vector k3 = m.rhs(t + 0.5 * dt, y + (0.5 * dt) * k2);
    const Vector k4 = m.rhs(t + dt, y + dt * k3);
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

Trajectory integrate(const FlowModel& model, const IntegrationSpec& spec) {
    if (!(spec.t_end > 0.0) || !(spec.h > 0.0) || !std::isfinite(spec.t_end)) {
        throw ArgumentError("integrate: t_end and h must be positive");
    }
    if (spec.substeps < 1) {
        throw ArgumentError("integrate: substeps must be at least 1");
    }
    const long long samples = std::llround(spec.t_end / spec.h);
    if (samples < 1) {
        throw ArgumentError("integrate: t_end is shorter than one sample interval");
    }
    Vector y = spec.initial;
    if (y.size() != model.state_dim()) {
        throw ArgumentError("integrate: initial state has dimension " + std::to_string(y.size()) + ", expected " +
                            std::to_string(model.state_dim()));
    }
    if (!healthy(y)) {
        throw DivergenceError("integrate: initial state is not finite", 0.0);
    }

    const Objective& f = model.objective();
    const bool velocity = model.representation() == Representation::PositionVelocity;
    const int d = model.dim();
    Trajectory traj;
    std::vector<Vector> zs;
    bool have_z = true;

    auto record = [&](double t) {
        const Vector x = model.position(y);
        traj.push(t, x, f.value(x));
        if (velocity) {
            traj.aux["V"].push_back(y.tail(d));
        }
        if (have_z) {
            if (auto z = model.dual_point(t, y)) {
                zs.push_back(std::move(*z));
            } else {
                have_z = false;
            }
        }
    };

    record(0.0);
    const double dt = spec.h / spec.substeps;
    double last_ok = 0.0;
    for (long long k = 0; k < samples; ++k) {
        const double t0 = spec.h * static_cast<double>(k);
        for (int i = 0; i < spec.substeps; ++i) {
            const double t = t0 + dt * i;
            y = rk4_step(model, t, y, dt);
            if (!healthy(y)) {
                throw DivergenceError(std::string(model.name()) + " diverged after t=" + std::to_string(last_ok),
                                      last_ok);
            }
            last_ok = t + dt;
        }
        record(spec.h * static_cast<double>(k + 1));
    }
    if (have_z) {
        traj.aux["Z"] = std::move(zs);
    }
    return traj;
}

Trajectory integrate_from(const FlowModel& model, const Vector& x0, double t_end, double h, int substeps) {
    IntegrationSpec spec;
    spec.t_end = t_end;
    spec.h = h;
    spec.substeps = substeps;
    spec.initial = model.initial_state(x0);
    return integrate(model, spec);
}

DeviationMetrics deviation_metrics(const Trajectory& a, const Trajectory& b, int k_lo, int k_hi) {
    if (k_lo < 0 || k_hi < k_lo) {
        throw ArgumentError("deviation_metrics: need 0 <= k_lo <= k_hi");
    }
    const auto need = static_cast<std::size_t>(k_hi) + 1;
    if (a.size() < need || b.size() < need) {
        throw ArgumentError("deviation_metrics: trajectory shorter than the window");
    }
    DeviationMetrics m;
    m.k_lo = k_lo;
    m.k_hi = k_hi;
    m.errors.reserve(need);
    for (std::size_t k = 0; k < need; ++k) {
        const double ta = a.times[k];
        const double tb = b.times[k];
        if (std::abs(ta - tb) > 1e-9 * std::max(1.0, std::abs(ta))) {
            throw ArgumentError("deviation_metrics: sample times differ at k=" + std::to_string(k));
        }
        if (a.points[k].size() != b.points[k].size()) {
            throw ArgumentError("deviation_metrics: dimension mismatch");
        }
        m.errors.push_back((a.points[k] - b.points[k]).norm());
    }
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        sum += m.errors[static_cast<std::size_t>(k)];
        m.window_max = std::max(m.window_max, m.errors[static_cast<std::size_t>(k)]);
    }
    m.window_mean = sum / (k_hi - k_lo + 1);
    return m;
}

double reduction_pct(double mean_ref, double mean_cand) {
    if (!(mean_ref > 0.0)) {
        throw ArgumentError("reduction_pct: reference error must be positive");
    }
    return 100.0 * (1.0 - mean_cand / mean_ref);
}

} // namespace accelflow
