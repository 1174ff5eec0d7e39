#pragma once

#include "accelflow/coefficients.hpp"
#include "accelflow/problems.hpp"
#include "accelflow/trajectory.hpp"

#include <optional>
#include <string_view>

namespace accelflow {

struct IterateState {
    int k = 0;
    Vector x;
    Vector y;
    Vector z;

    /// x₀ = y₀ = z₀.
    static IterateState start(const Vector& x0);
};

/// One step of the three-sequence form:
///   y = x + a(z − x),  x⁺ = y − s∇f(y),  z⁺ = x + (x⁺ − x)/θ.
/// The returned state holds the new x, z and the y used to produce them.
IterateState nag_step_three(const IterateState& state, const StepCoefficients& coeff, const GradientFn& grad);

/// One step of the two-sequence form: y = x + b(x − x_prev), returns y − s∇f(y).
Vector nag_step_two(const Vector& x, const Vector& x_prev, double b, double s, const GradientFn& grad);

enum class NagVariant {
    C,            // schedule from the Su growth A(t) = (t+ε)²/(4L), μ = 0
    SC,           // schedule from the Wilson growth A(t) = exp(√(μ/L)t)
    ConstantC,    // s = 1/L, b_k = k/(k+3)
    ConstantSC,   // s = 1/L, b = (√κ−1)/(√κ+1)
};

std::string_view variant_name(NagVariant v);
std::optional<NagVariant> variant_from_name(std::string_view name);

struct NagSettings {
    double h = 1.0;
    int k_max = 300;
    double eps = 1.0;
    bool verbose = false;   // record y_k and z_k as aux series
};

/// Three-sequence run over the schedule's full horizon, sampled at t = hk.
Trajectory run_nag_schedule(const Objective& f, const Vector& x0, const Schedule& schedule, double h,
                            bool verbose = false);

/// Two-sequence run using the schedule's b_k and s_k.
Trajectory run_nag_two_sequence(const Objective& f, const Vector& x0, const Schedule& schedule, double h);

/// Dispatches on the variant; NAG-C / NAG-SC build their schedule from
/// (eps, L, h) / (mu, L, h) with the objective's configured parameters.
Trajectory run_nag(const Objective& f, const Vector& x0, NagVariant variant, const NagSettings& settings);

/// b_k for NAG-C-C (k/(k+3), b₀ = 0) and NAG-SC-C.
double constant_step_momentum_c(int k);
double constant_step_momentum_sc(double mu, double L);

} // namespace accelflow
