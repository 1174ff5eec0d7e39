#include "accelflow/nag.hpp"

#include "accelflow/error.hpp"

#include <cmath>

namespace accelflow {

IterateState IterateState::start(const Vector& x0) { return IterateState{0, x0, x0, x0}; }

IterateState nag_step_three(const IterateState& state, const StepCoefficients& coeff, const GradientFn& grad) {
    if (!(coeff.theta > 0.0 && coeff.theta < 1.0)) {
        throw ArgumentError("nag_step_three: theta must lie in (0, 1)");
    }
    if (!(coeff.a >= 0.0 && coeff.a <= 1.0)) {
        throw ArgumentError("nag_step_three: a must lie in [0, 1]");
    }
    if (!(coeff.s > 0.0)) {
        throw ArgumentError("nag_step_three: s must be positive");
    }
    IterateState next;
    next.k = state.k + 1;
    next.y = state.x + coeff.a * (state.z - state.x);
    next.x = next.y - coeff.s * grad(next.y);
    next.z = state.x + (next.x - state.x) / coeff.theta;
    return next;
}

Vector nag_step_two(const Vector& x, const Vector& x_prev, double b, double s, const GradientFn& grad) {
    if (!(s > 0.0)) {
        throw ArgumentError("nag_step_two: s must be positive");
    }
    const Vector y = x + b * (x - x_prev);
    return y - s * grad(y);
}

std::string_view variant_name(NagVariant v) {
    switch (v) {
    case NagVariant::C: return "NAG-C";
    case NagVariant::SC: return "NAG-SC";
    case NagVariant::ConstantC: return "NAG-C-C";
    case NagVariant::ConstantSC: return "NAG-SC-C";
    }
    return "?";
}

std::optional<NagVariant> variant_from_name(std::string_view name) {
    for (NagVariant v : {NagVariant::C, NagVariant::SC, NagVariant::ConstantC, NagVariant::ConstantSC}) {
        if (variant_name(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

double constant_step_momentum_c(int k) { return k <= 0 ? 0.0 : static_cast<double>(k) / (k + 3.0); }

double constant_step_momentum_sc(double mu, double L) {
    if (!(mu > 0.0) || !(L >= mu)) {
        throw ArgumentError("NAG-SC-C requires 0 < mu <= L");
    }
    const double sk = std::sqrt(L / mu);
    return (sk - 1.0) / (sk + 1.0);
}

Trajectory run_nag_schedule(const Objective& f, const Vector& x0, const Schedule& schedule, double h, bool verbose) {
    if (!(h > 0.0)) {
        throw ArgumentError("run_nag: h must be positive");
    }
    if (x0.size() != f.dim()) {
        throw ArgumentError("run_nag: x0 dimension mismatch");
    }
    const GradientFn grad = f.gradient_fn();
    Trajectory traj;
    IterateState state = IterateState::start(x0);
    traj.push(0.0, state.x, f.value(state.x));
    if (verbose) {
        traj.aux["y"].push_back(state.y);
        traj.aux["z"].push_back(state.z);
    }
    for (int k = 0; k < schedule.horizon(); ++k) {
        const IterateState next = nag_step_three(state, schedule.at(k), grad);
        traj.push(h * (k + 1), next.x, f.value(next.x));
        if (verbose) {
            // y_{k+1} is not formed until the next step; record it so every
            // sample carries (x_k, y_k, z_k).
            const double a_next = k + 1 < schedule.horizon() ? schedule.at(k + 1).a : 0.0;
            traj.aux["y"].push_back(next.x + a_next * (next.z - next.x));
            traj.aux["z"].push_back(next.z);
        }
        state = next;
    }
    return traj;
}

Trajectory run_nag_two_sequence(const Objective& f, const Vector& x0, const Schedule& schedule, double h) {
    if (!(h > 0.0)) {
        throw ArgumentError("run_nag: h must be positive");
    }
    if (x0.size() != f.dim()) {
        throw ArgumentError("run_nag: x0 dimension mismatch");
    }
    const GradientFn grad = f.gradient_fn();
    Trajectory traj;
    Vector x_prev = x0;
    Vector x = x0;
    traj.push(0.0, x, f.value(x));
    for (int k = 0; k < schedule.horizon(); ++k) {
        const StepCoefficients& c = schedule.at(k);
        Vector next = nag_step_two(x, x_prev, c.b, c.s, grad);
        x_prev = std::move(x);
        x = std::move(next);
        traj.push(h * (k + 1), x, f.value(x));
    }
    return traj;
}

namespace {

Trajectory run_constant(const Objective& f, const Vector& x0, NagVariant variant, const NagSettings& settings) {
    const GradientFn grad = f.gradient_fn();
    const double s = 1.0 / f.L();
    const double b_sc = variant == NagVariant::ConstantSC ? constant_step_momentum_sc(f.mu(), f.L()) : 0.0;
    Trajectory traj;
    Vector x_prev = x0;
    Vector x = x0;
    traj.push(0.0, x, f.value(x));
    for (int k = 0; k < settings.k_max; ++k) {
        const double b = variant == NagVariant::ConstantC ? constant_step_momentum_c(k) : (k == 0 ? 0.0 : b_sc);
        Vector next = nag_step_two(x, x_prev, b, s, grad);
        x_prev = std::move(x);
        x = std::move(next);
        traj.push(settings.h * (k + 1), x, f.value(x));
    }
    return traj;
}

} // namespace

Trajectory run_nag(const Objective& f, const Vector& x0, NagVariant variant, const NagSettings& settings) {
    if (settings.k_max <= 0) {
        throw ArgumentError("run_nag: k_max must be positive");
    }
    if (!(settings.h > 0.0)) {
        throw ArgumentError("run_nag: h must be positive");
    }
    if (x0.size() != f.dim()) {
        throw ArgumentError("run_nag: x0 dimension mismatch");
    }
    switch (variant) {
    case NagVariant::C:
        return run_nag_schedule(f, x0, su_growth(settings.eps, f.L(), settings.h).schedule(settings.k_max),
                                settings.h, settings.verbose);
    case NagVariant::SC:
        return run_nag_schedule(f, x0, wilson_growth(f.mu(), f.L(), settings.h).schedule(settings.k_max),
                                settings.h, settings.verbose);
    case NagVariant::ConstantC:
    case NagVariant::ConstantSC:
        return run_constant(f, x0, variant, settings);
    }
    throw ArgumentError("run_nag: unknown variant");
}

} // namespace accelflow
