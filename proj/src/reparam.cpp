#include "accelflow/reparam.hpp"

#include "accelflow/error.hpp"
#include "accelflow/flows.hpp"
#include "accelflow/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace accelflow {

Vector interpolate_cubic(const std::vector<double>& times, const std::vector<Vector>& values, double t) {
    const std::size_t n = times.size();
    if (n == 0 || values.size() != n) {
        throw ArgumentError("interpolate_cubic: empty or mismatched series");
    }
    if (!(t >= times.front() && t <= times.back())) {
        throw DomainError("interpolate_cubic: t=" + std::to_string(t) + " outside the sampled range");
    }
    if (n == 1) {
        return values.front();
    }
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t i = it == times.begin() ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
    i = std::min(i, n - 2);
    const double t0 = times[i];
    const double t1 = times[i + 1];
    const double dt = t1 - t0;
    auto tangent = [&](std::size_t j) -> Vector {
        if (j == 0) {
            return (values[1] - values[0]) / (times[1] - times[0]);
        }
        if (j == n - 1) {
            return (values[n - 1] - values[n - 2]) / (times[n - 1] - times[n - 2]);
        }
        return (values[j + 1] - values[j - 1]) / (times[j + 1] - times[j - 1]);
    };
    const double s = (t - t0) / dt;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * values[i] + (h10 * dt) * tangent(i) + h01 * values[i + 1] + (h11 * dt) * tangent(i + 1);
}

Trajectory reparametrize(const Trajectory& z, const MonotoneMap& tau, const std::vector<double>& out_times,
                         const Objective& f) {
    if (z.size() == 0) {
        throw ArgumentError("reparametrize: empty trajectory");
    }
    Trajectory out;
    for (double u : out_times) {
        if (!(u >= 0.0 && u <= tau.tau_max())) {
            throw DomainError("reparametrize: u=" + std::to_string(u) + " outside the range of tau");
        }
        const double t = tau.inverse(u);
        Vector q = interpolate_cubic(z.times, z.points, t);
        const double fq = f.value(q);
        out.push(u, std::move(q), fq);
    }
    return out;
}

QrSequences qr_discretize(const Objective& f, double mu, const Vector& x0, int k_max) {
    if (!(mu > 0.0)) {
        throw ArgumentError("qr_discretize: mu must be positive");
    }
    if (k_max < 0) {
        throw ArgumentError("qr_discretize: k_max must be non-negative");
    }
    if (x0.size() != f.dim()) {
        throw ArgumentError("qr_discretize: x0 dimension mismatch");
    }
    QrSequences out;
    out.q.reserve(static_cast<std::size_t>(k_max) + 1);
    out.r.reserve(static_cast<std::size_t>(k_max) + 1);
    out.q.push_back(x0);
    out.r.push_back(x0);
    for (int k = 0; k < k_max; ++k) {
        Vector q = out.q.back() - f.gradient(out.q.back());
        Vector r = (mu * q + out.r.back()) / (1.0 + mu);
        out.q.push_back(std::move(q));
        out.r.push_back(std::move(r));
    }
    return out;
}

TimeXZReport verify_time_xz(const Objective& f, double mu, const Vector& x0, double t_end, int substeps) {
    if (!(mu > 0.0)) {
        throw ArgumentError("verify_time_xz: mu must be positive");
    }
    FlowOptions opt;
    opt.mu = mu;
    const FlowModel txz = FlowModel::catalog(ModelKind::TimeXZ, f, opt);
    const FlowModel osc = FlowModel::catalog(ModelKind::OdeScTime, f, opt);

    TimeXZReport rep;
    rep.sample_interval = std::sqrt(mu * f.L());
    const int k_max = static_cast<int>(std::floor(t_end / rep.sample_interval + 1e-9));
    if (k_max < 1) {
        throw ArgumentError("verify_time_xz: t_end shorter than one sample");
    }
    const double horizon = k_max * rep.sample_interval;
    rep.time_xz = integrate_from(txz, x0, horizon, rep.sample_interval, substeps);
    rep.ode_sc_time = integrate_from(osc, x0, horizon, rep.sample_interval, substeps);
    rep.qr = qr_discretize(f, mu, x0, k_max);
    rep.gap.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        const double g = (rep.time_xz.points[static_cast<std::size_t>(k)] - rep.qr.r[static_cast<std::size_t>(k)]).norm();
        rep.gap.push_back(g);
        rep.max_gap = std::max(rep.max_gap, g);
    }
    const std::vector<double>& fv = rep.time_xz.f_values;
    for (std::size_t k = 1; k < fv.size(); ++k) {
        if (fv[k] > fv[k - 1]) {
            rep.f_monotone = false;
            rep.first_increase = static_cast<int>(k);
            break;
        }
    }
    return rep;
}

EquivalenceReport check_qgf_equivalence(const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                                        double mu, const Vector& x0, double t_end, double h, int samples,
                                        int substeps) {
    if (samples < 1) {
        throw ArgumentError("check_qgf_equivalence: samples must be positive");
    }
    const FlowModel gen = FlowModel::generalized(f, g, scaling.with_constant_a(1.0), mu);
    EquivalenceReport rep;
    const Trajectory raw = integrate_from(gen, x0, t_end, h, substeps);
    rep.generalized = raw.with_primary("Z", f);

    const MonotoneMap tau = tau_from_scaling(scaling, mu, rep.generalized.times);
    for (double t : rep.generalized.times) {
        rep.tau.push_back(tau(t));
    }
    const double U = tau(rep.generalized.times.back());
    const double du = U / samples;
    const FlowModel qgf = FlowModel::quasi_gradient(f, g);
    const Trajectory direct = integrate_from(qgf, x0, du * samples, du, substeps);
    rep.direct = direct;
    std::vector<double> us = direct.times;
    us.back() = std::min(us.back(), tau.tau_max());
    rep.reparametrized = reparametrize(rep.generalized, tau, us, f);
    for (std::size_t i = 0; i < us.size(); ++i) {
        rep.sup_gap = std::max(rep.sup_gap, (direct.points[i] - rep.reparametrized.points[i]).norm());
    }
    return rep;
}

std::vector<Violation> check_tau_rate(const std::vector<double>& tau, const std::vector<double>& gap, double mu,
                                      double E0, double tol_rel) {
    if (tau.size() != gap.size()) {
        throw ArgumentError("check_tau_rate: series lengths differ");
    }
    std::vector<Violation> out;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        double bound;
        if (mu == 0.0) {
            if (!(tau[i] > 0.0)) {
                continue;
            }
            bound = E0 / tau[i];
        } else {
            bound = E0 * std::exp(-mu * tau[i]);
        }
        if (gap[i] > bound * (1.0 + tol_rel)) {
            out.push_back({i, tau[i], gap[i] - bound});
        }
    }
    return out;
}

} // namespace accelflow
