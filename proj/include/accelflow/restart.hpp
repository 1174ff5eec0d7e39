#pragma once

#include "accelflow/coefficients.hpp"
#include "accelflow/problems.hpp"
#include "accelflow/trajectory.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace accelflow {

/// ⟨x_next − 2x + x_prev, x − x_prev⟩ < 0.
bool restart_condition_ours(const Vector& x_next, const Vector& x, const Vector& x_prev);

/// Speed restart: the step shrinks, ‖x_next − x‖ < ‖x − x_prev‖.
bool restart_condition_su(const Vector& x_next, const Vector& x, const Vector& x_prev);

enum class RestartScheme { Ours, Su, None };

std::string_view scheme_name(RestartScheme scheme);
std::optional<RestartScheme> scheme_from_name(std::string_view name);

struct RestartSettings {
    RestartScheme scheme = RestartScheme::Ours;
    std::function<double(int)> step;       // s_k
    std::function<double(int)> momentum;   // b_k, b_0 = 0
    int k_min = 20;
    int k_max = 200;
};

/// Step size 1/L and b_k = k/(k+3).
RestartSettings constant_step_restart(RestartScheme scheme, double L, int k_min, int k_max);

struct RestartRun {
    Trajectory trajectory;     // x_0..x_{k_max}; channel "restart" flags replaced iterates
    std::vector<int> events;   // indices k+1 at which a restart fired
    RestartScheme scheme = RestartScheme::None;
    int k_min = 1;
};

/// Two-sequence Nesterov iteration from x_{-1} = x_0.
///
/// Ours: if the condition fires on x_{k+1} and the counter j ≥ k_min, x_{k+1}
/// is replaced by x_k − s_k∇f(x_k) and j resets to 1; b keeps the global
/// index k. Su: if the speed condition fires (and j ≥ k_min), x_{k+1} is kept
/// and the momentum index restarts so the next step uses b_1.
///
/// Throws ArgumentError unless 0 < s_k ≤ 1/L_true and 0 < b_k ≤ 1 (k ≥ 1) for
/// every coefficient used.
RestartRun run_restart(const Objective& f, const Vector& x0, const RestartSettings& settings);

struct MonotoneReport {
    bool ok = true;
    std::optional<int> first_violation;   // index k+1 with f(x_{k+1}) ≥ f(x_k)
};

/// f(x_{k+1}) < f(x_k) for every k, except that consecutive iterates both
/// sitting exactly at f* are accepted.
MonotoneReport verify_monotone(const RestartRun& run, double f_star = 0.0);

/// Coefficients of Ẍ + c₁Ẋ + c₂∇f(Y) = 0 with Y = X + bẊ.
struct UnifiedForm {
    ScalarFn c1;
    ScalarFn c2;
    ScalarFn b;
};

/// Convex: c₁ = e^α − α̇, c₂ = e^{2α+β}. Uniformly convex: c₁ = e^α − α̇ +
/// β̇(1 − a), c₂ = e^{2α}/μ. In both, b = a·e^{−α}.
UnifiedForm unified_form(const ContinuousScaling& scaling, double mu);

/// First grid point where c₁, c₂ or b is not positive, if any.
std::optional<double> unified_form_violation(const UnifiedForm& form, const std::vector<double>& grid);

} // namespace accelflow
