#include "accelflow/restart.hpp"

#include "accelflow/error.hpp"

#include <cmath>
#include <string>

namespace accelflow {

namespace {

void check_dims(const Vector& a, const Vector& b, const Vector& c) {
    if (a.size() != b.size() || b.size() != c.size()) {
        throw ArgumentError("restart condition: dimension mismatch");
    }
}

} // namespace

bool restart_condition_ours(const Vector& x_next, const Vector& x, const Vector& x_prev) {
    check_dims(x_next, x, x_prev);
    return (x_next - 2.0 * x + x_prev).dot(x - x_prev) < 0.0;
}

bool restart_condition_su(const Vector& x_next, const Vector& x, const Vector& x_prev) {
    check_dims(x_next, x, x_prev);
    return (x_next - x).norm() < (x - x_prev).norm();
}

std::string_view scheme_name(RestartScheme scheme) {
    switch (scheme) {
    case RestartScheme::Ours: return "ours";
    case RestartScheme::Su: return "su";
    case RestartScheme::None: return "none";
    }
    return "?";
}

std::optional<RestartScheme> scheme_from_name(std::string_view name) {
    for (RestartScheme s : {RestartScheme::Ours, RestartScheme::Su, RestartScheme::None}) {
        if (scheme_name(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

RestartSettings constant_step_restart(RestartScheme scheme, double L, int k_min, int k_max) {
    if (!(L > 0.0)) {
        throw ArgumentError("constant_step_restart: L must be positive");
    }
    RestartSettings s;
    s.scheme = scheme;
    s.step = [L](int) { return 1.0 / L; };
    s.momentum = [](int k) { return k <= 0 ? 0.0 : static_cast<double>(k) / (k + 3.0); };
    s.k_min = k_min;
    s.k_max = k_max;
    return s;
}

RestartRun run_restart(const Objective& f, const Vector& x0, const RestartSettings& settings) {
    if (!settings.step || !settings.momentum) {
        throw ArgumentError("run_restart: step and momentum rules are required");
    }
    if (settings.k_max < 1 || settings.k_min < 1) {
        throw ArgumentError("run_restart: k_max and k_min must be at least 1");
    }
    if (x0.size() != f.dim()) {
        throw ArgumentError("run_restart: x0 dimension mismatch");
    }
    const double s_cap = 1.0 / f.true_smoothness();
    auto step = [&](int k) {
        const double s = settings.step(k);
        if (!(s > 0.0) || s > s_cap * (1.0 + 1e-15)) {
            throw ArgumentError("run_restart: s_" + std::to_string(k) + " = " + std::to_string(s) +
                                " outside (0, 1/L]");
        }
        return s;
    };
    auto momentum = [&](int k) {
        const double b = settings.momentum(k);
        if (k == 0 ? !(b >= 0.0 && b <= 1.0) : !(b > 0.0 && b <= 1.0)) {
            throw ArgumentError("run_restart: b_" + std::to_string(k) + " = " + std::to_string(b) +
                                " outside (0, 1]");
        }
        return b;
    };

    RestartRun run;
    run.scheme = settings.scheme;
    run.k_min = settings.k_min;
    Trajectory& traj = run.trajectory;
    std::vector<double>& flags = traj.channels["restart"];
    traj.push(0.0, x0, f.value(x0));
    flags.push_back(0.0);

    Vector x_prev = x0;
    Vector x = x0;
    int j = 1;
    int m = 0;    // momentum index for the Su comparator
    for (int k = 0; k < settings.k_max; ++k) {
        const double s = step(k);
        const int bk = settings.scheme == RestartScheme::Su ? m : k;
        const double b = momentum(bk);
        const Vector y = x + b * (x - x_prev);
        Vector x_next = y - s * f.gradient(y);

        bool fired = false;
        switch (settings.scheme) {
        case RestartScheme::Ours:
            fired = j >= settings.k_min && restart_condition_ours(x_next, x, x_prev);
            if (fired) {
                x_next = x - s * f.gradient(x);
            }
            break;
        case RestartScheme::Su:
            fired = k > 0 && j >= settings.k_min && restart_condition_su(x_next, x, x_prev);
            break;
        case RestartScheme::None:
            break;
        }
        if (fired) {
            j = 1;
            m = 1;
            run.events.push_back(k + 1);
        } else {
            ++j;
            ++m;
        }
        x_prev = std::move(x);
        x = std::move(x_next);
        traj.push(static_cast<double>(k + 1), x, f.value(x));
        flags.push_back(fired ? 1.0 : 0.0);
    }
    return run;
}

MonotoneReport verify_monotone(const RestartRun& run, double f_star) {
    const std::vector<double>& fv = run.trajectory.f_values;
    for (std::size_t k = 0; k + 1 < fv.size(); ++k) {
        if (fv[k + 1] < fv[k]) {
            continue;
        }
        if (fv[k + 1] == f_star && fv[k] == f_star) {
            continue;
        }
        return MonotoneReport{false, static_cast<int>(k + 1)};
    }
    return {};
}

UnifiedForm unified_form(const ContinuousScaling& sc, double mu) {
    if (!(mu >= 0.0)) {
        throw ArgumentError("unified_form: mu must be non-negative");
    }
    UnifiedForm u;
    u.b = [sc](double t) { return sc.a(t) * std::exp(-sc.alpha(t)); };
    if (mu == 0.0) {
        u.c1 = [sc](double t) { return sc.exp_alpha(t) - sc.alpha_dot(t); };
        u.c2 = [sc](double t) { return std::exp(2.0 * sc.alpha(t) + sc.beta(t)); };
    } else {
        u.c1 = [sc](double t) { return sc.exp_alpha(t) - sc.alpha_dot(t) + sc.beta_dot(t) * (1.0 - sc.a(t)); };
        u.c2 = [sc, mu](double t) { return std::exp(2.0 * sc.alpha(t)) / mu; };
    }
    return u;
}

std::optional<double> unified_form_violation(const UnifiedForm& form, const std::vector<double>& grid) {
    for (double t : grid) {
        if (!(form.c1(t) > 0.0) || !(form.c2(t) > 0.0) || !(form.b(t) > 0.0)) {
            return t;
        }
    }
    return std::nullopt;
}

} // namespace accelflow
