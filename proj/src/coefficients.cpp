#include "accelflow/coefficients.hpp"

#include "accelflow/error.hpp"

#include <cmath>
#include <string>

namespace accelflow {

Schedule Schedule::from_A(std::vector<double> A, double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw ArgumentError("schedule_from_A: mu must be non-negative");
    }
    if (A.size() < 2) {
        throw ArgumentError("schedule_from_A: need at least A_0 and A_1");
    }
    for (std::size_t k = 0; k < A.size(); ++k) {
        if (!(A[k] > 0.0) || !std::isfinite(A[k])) {
            throw ScheduleError("schedule_from_A: A_" + std::to_string(k) + " is not positive");
        }
        if (k > 0 && !(A[k] > A[k - 1])) {
            throw ScheduleError("schedule_from_A: A is not strictly increasing at k=" + std::to_string(k));
        }
    }

    std::vector<StepCoefficients> coeffs(A.size() - 1);
    for (std::size_t k = 0; k + 1 < A.size(); ++k) {
        const double dA = A[k + 1] - A[k];
        StepCoefficients& c = coeffs[k];
        c.theta = dA / A[k + 1];
        if (mu == 0.0) {
            c.a = c.theta;
            c.s = dA * dA / A[k + 1];
        } else {
            c.a = dA / (2.0 * A[k + 1] - A[k]);
            c.s = dA * dA / (mu * A[k + 1] * A[k + 1]);
        }
        if (k == 0) {
            c.b = 0.0;
        } else {
            // (1 − θ_{k−1}) / θ_{k−1} = A_{k−1} / (A_k − A_{k−1})
            c.b = c.a * A[k - 1] / (A[k] - A[k - 1]);
        }
    }
    return Schedule(std::move(A), std::move(coeffs), mu);
}

double Schedule::A(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= A_.size()) {
        throw ArgumentError("Schedule::A: index out of range");
    }
    return A_[static_cast<std::size_t>(k)];
}

const StepCoefficients& Schedule::at(int k) const {
    if (k < 0 || k >= horizon()) {
        throw ArgumentError("Schedule::at: index " + std::to_string(k) + " beyond horizon " +
                            std::to_string(horizon()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

double ContinuousScaling::exp_alpha(double t) const { return std::exp(alpha(t)); }

double ContinuousScaling::exp_beta(double t) const { return std::exp(beta(t)); }

ContinuousScaling ContinuousScaling::with_constant_a(double value) const {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw ArgumentError("lookahead weight must lie in [0, 1]");
    }
    ContinuousScaling copy = *this;
    copy.a = [value](double) { return value; };
    return copy;
}

double GrowthModel::A_k(int k) const { return scaling.A(h * k); }

Schedule GrowthModel::schedule(int k_max) const {
    if (k_max < 1) {
        throw ArgumentError("schedule horizon must be at least 1");
    }
    std::vector<double> A(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        A[static_cast<std::size_t>(k)] = A_k(k);
    }
    return Schedule::from_A(std::move(A), mu);
}

GrowthModel su_growth(double eps, double L, double h) {
    if (!(eps >= 0.0) || !(L > 0.0) || !(h > 0.0)) {
        throw ArgumentError("su_growth: requires eps >= 0, L > 0, h > 0");
    }
    ContinuousScaling s;
    s.name = "su";
    s.alpha = [eps](double t) { return std::log(2.0 / (t + eps)); };
    s.alpha_dot = [eps](double t) { return -1.0 / (t + eps); };
    s.beta = [eps, L](double t) { return std::log((t + eps) * (t + eps) / (4.0 * L)); };
    s.beta_dot = [eps](double t) { return 2.0 / (t + eps); };
    s.a = [eps, h](double t) {
        const double u = t + eps;
        return h * (2.0 * u + h) / ((u + h) * (u + h));
    };
    s.A = [eps, L](double t) { return (t + eps) * (t + eps) / (4.0 * L); };
    s.A_dot = [eps, L](double t) { return (t + eps) / (2.0 * L); };
    return GrowthModel{std::move(s), h, 0.0};
}

GrowthModel wilson_growth(double mu, double L, double h) {
    if (!(mu > 0.0)) {
        throw ArgumentError("wilson_growth: requires mu > 0");
    }
    if (!(L >= mu) || !(h > 0.0)) {
        throw ArgumentError("wilson_growth: requires mu <= L and h > 0");
    }
    const double r = std::sqrt(mu / L);
    const double em1 = std::expm1(r * h);
    const double a = em1 / (1.0 + 2.0 * em1);
    ContinuousScaling s;
    s.name = "wilson";
    s.alpha = [r](double) { return std::log(r); };
    s.alpha_dot = [](double) { return 0.0; };
    s.beta = [r](double t) { return r * t; };
    s.beta_dot = [r](double) { return r; };
    s.a = [a](double) { return a; };
    s.A = [r](double t) { return std::exp(r * t); };
    s.A_dot = [r](double t) { return r * std::exp(r * t); };
    return GrowthModel{std::move(s), h, mu};
}

ContinuousScaling muehlebach_convex_scaling(double L) {
    if (!(L > 0.0)) {
        throw ArgumentError("muehlebach_convex_scaling: requires L > 0");
    }
    ContinuousScaling s;
    s.name = "muehlebach-c";
    s.alpha = [](double t) { return std::log(2.0 / (t + 3.0)); };
    s.alpha_dot = [](double t) { return -1.0 / (t + 3.0); };
    s.beta = [L](double t) { return std::log((t + 3.0) * (t + 3.0) / (4.0 * L)); };
    s.beta_dot = [](double t) { return 2.0 / (t + 3.0); };
    s.a = [](double t) { return 2.0 * t / ((t + 3.0) * (t + 3.0)); };
    return s;
}

ContinuousScaling muehlebach_sc_scaling(double mu, double L) {
    if (!(mu > 0.0) || !(L >= mu)) {
        throw ArgumentError("muehlebach_sc_scaling: requires 0 < mu <= L");
    }
    const double kappa = L / mu;
    const double sk = std::sqrt(kappa);
    const double beta_rate = (sk - 1.0) / (kappa + 1.0);
    const double a = (sk - 1.0) / (sk * (sk + 1.0));
    ContinuousScaling s;
    s.name = "muehlebach-sc";
    s.alpha = [kappa](double) { return -0.5 * std::log(kappa); };
    s.alpha_dot = [](double) { return 0.0; };
    s.beta = [beta_rate](double t) { return beta_rate * t; };
    s.beta_dot = [beta_rate](double) { return beta_rate; };
    s.a = [a](double) { return a; };
    return s;
}

ContinuousScaling chen_scaling(double mu, double step) {
    if (!(mu > 0.0) || !(step > 0.0)) {
        throw ArgumentError("chen_scaling: requires mu > 0 and s > 0");
    }
    const double rm = std::sqrt(mu);
    const double rms = std::sqrt(mu * step);
    const double a = rms / (1.0 + 2.0 * rms);
    ContinuousScaling s;
    s.name = "chen";
    s.alpha = [mu](double) { return 0.5 * std::log(mu); };
    s.alpha_dot = [](double) { return 0.0; };
    s.beta = [rm](double t) { return rm * t; };
    s.beta_dot = [rm](double) { return rm; };
    s.a = [a](double) { return a; };
    return s;
}

ScalingReport validate_ideal_scaling(const ContinuousScaling& scaling, std::span<const double> grid) {
    if (grid.empty()) {
        throw ArgumentError("validate_ideal_scaling: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw ArgumentError("validate_ideal_scaling: grid must be increasing");
        }
    }
    // Equality cases (e^α = β̇) are exact analytically; allow rounding.
    constexpr double rel = 1e-12;
    auto fail = [](double t, std::string why) { return ScalingReport{false, t, std::move(why)}; };
    for (double t : grid) {
        const double ea = scaling.exp_alpha(t);
        const double bd = scaling.beta_dot(t);
        if (!(bd > 0.0)) {
            return fail(t, "beta_dot is not positive");
        }
        if (!(ea >= bd * (1.0 - rel))) {
            return fail(t, "exp(alpha) < beta_dot");
        }
        const double a = scaling.a(t);
        if (!(a >= 0.0 && a <= 1.0)) {
            return fail(t, "lookahead weight a outside [0, 1]");
        }
        if (scaling.A) {
            if (!(scaling.A(t) > 0.0)) {
                return fail(t, "A is not positive");
            }
            if (scaling.A_dot && !(scaling.A_dot(t) > 0.0)) {
                return fail(t, "A_dot is not positive");
            }
        }
    }
    return {};
}

MonotoneMap tau_from_scaling(const ContinuousScaling& scaling, double mu, std::span<const double> grid) {
    if (!(mu >= 0.0)) {
        throw ArgumentError("tau_from_scaling: mu must be non-negative");
    }
    if (grid.size() < 2 || grid.front() != 0.0) {
        throw ArgumentError("tau_from_scaling: grid must start at 0 and have at least two points");
    }
    const ScalingReport report = validate_ideal_scaling(scaling, grid);
    if (!report.ok) {
        throw DomainError("tau_from_scaling: invalid scaling at t=" + std::to_string(*report.first_violation) +
                          ": " + report.reason);
    }
    auto rate = [&](double t) {
        const double v = mu > 0.0 ? scaling.exp_alpha(t) / mu : std::exp(scaling.alpha(t) + scaling.beta(t));
        if (!std::isfinite(v) || !(v > 0.0)) {
            throw DomainError("tau_from_scaling: integrand not finite and positive at t=" + std::to_string(t));
        }
        return v;
    };

    constexpr int refine = 4;
    std::vector<double> t;
    std::vector<double> tau;
    std::vector<double> tau_dot;
    t.reserve((grid.size() - 1) * refine + 1);
    t.push_back(grid[0]);
    tau.push_back(0.0);
    tau_dot.push_back(rate(grid[0]));
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double dt = (grid[i + 1] - grid[i]) / refine;
        for (int j = 1; j <= refine; ++j) {
            const double lo = grid[i] + (j - 1) * dt;
            const double hi = j == refine ? grid[i + 1] : grid[i] + j * dt;
            const double f_hi = rate(hi);
            const double f_mid = rate(0.5 * (lo + hi));
            tau.push_back(tau.back() + (hi - lo) / 6.0 * (tau_dot.back() + 4.0 * f_mid + f_hi));
            t.push_back(hi);
            tau_dot.push_back(f_hi);
        }
    }
    return MonotoneMap(std::move(t), std::move(tau), std::move(tau_dot));
}

ContinuousScaling scaling_from_tau(TimeMap map, double C, double mu) {
    if (!map.tau || !map.tau_dot) {
        throw ArgumentError("scaling_from_tau: tau and tau_dot are required");
    }
    if (!(mu >= 0.0)) {
        throw ArgumentError("scaling_from_tau: mu must be non-negative");
    }
    if (mu == 0.0 && !(C > 0.0)) {
        throw ArgumentError("scaling_from_tau: C must be positive in convex mode");
    }
    auto rate = [td = map.tau_dot](double t) {
        const double v = td(t);
        if (!(v > 0.0)) {
            throw DomainError("scaling_from_tau: tau_dot is not positive at t=" + std::to_string(t));
        }
        return v;
    };
    ScalarFn tau_ddot = map.tau_ddot ? map.tau_ddot : ScalarFn([](double) { return 0.0; });

    ContinuousScaling s;
    s.a = [](double) { return 1.0; };
    if (mu == 0.0) {
        s.name = "from-tau-convex";
        s.alpha = [tau = map.tau, rate, C](double t) { return std::log(rate(t) / (tau(t) + C)); };
        s.alpha_dot = [tau = map.tau, rate, tau_ddot, C](double t) {
            const double d = rate(t);
            return tau_ddot(t) / d - d / (tau(t) + C);
        };
        s.beta = [tau = map.tau, C](double t) { return std::log(tau(t) + C); };
        s.beta_dot = [tau = map.tau, rate, C](double t) { return rate(t) / (tau(t) + C); };
    } else {
        s.name = "from-tau-strong";
        s.alpha = [rate, mu](double t) { return std::log(mu * rate(t)); };
        s.alpha_dot = [rate, tau_ddot](double t) { return tau_ddot(t) / rate(t); };
        s.beta = [tau = map.tau, mu](double t) { return mu * tau(t); };
        s.beta_dot = [rate, mu](double t) { return mu * rate(t); };
    }
    return s;
}

} // namespace accelflow
