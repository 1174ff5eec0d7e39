#pragma once

#include "accelflow/monotone_map.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace accelflow {

using ScalarFn = std::function<double(double)>;

enum class ConvexityMode { Convex, StronglyConvex };

/// Per-iteration coefficients of the three- and two-sequence Nesterov forms.
struct StepCoefficients {
    double theta = 0.0;
    double a = 0.0;
    double s = 0.0;
    double b = 0.0;
};

/// Discrete schedule generated by an auxiliary sequence A_0 < A_1 < … < A_K.
///
/// Convex mode (mu = 0): a_k = θ_k, s_k = (A_{k+1} − A_k)² / A_{k+1}.
/// Strongly convex mode: a_k = (A_{k+1} − A_k) / (2A_{k+1} − A_k),
/// s_k = (A_{k+1} − A_k)² / (μA_{k+1}²). In both, θ_k = (A_{k+1} − A_k)/A_{k+1}
/// and b_k = a_k(1 − θ_{k−1})/θ_{k−1} with b_0 = 0.
class Schedule {
public:
    /// `A` holds A_0..A_K; the schedule then has coefficients for k = 0..K−1.
    static Schedule from_A(std::vector<double> A, double mu);

    ConvexityMode mode() const noexcept { return mu_ > 0.0 ? ConvexityMode::StronglyConvex : ConvexityMode::Convex; }
    double mu() const noexcept { return mu_; }
    int horizon() const noexcept { return static_cast<int>(coeffs_.size()); }

    double A(int k) const;
    const StepCoefficients& at(int k) const;
    const std::vector<StepCoefficients>& coefficients() const noexcept { return coeffs_; }

private:
    Schedule(std::vector<double> A, std::vector<StepCoefficients> c, double mu)
        : A_(std::move(A)), coeffs_(std::move(c)), mu_(mu) {}

    std::vector<double> A_;
    std::vector<StepCoefficients> coeffs_;
    double mu_;
};

/// Continuous coefficient functions α, β, a of the generalized flows, plus the
/// generating A(t) when one exists.
struct ContinuousScaling {
    std::string name;
    ScalarFn alpha;
    ScalarFn alpha_dot;
    ScalarFn beta;
    ScalarFn beta_dot;
    ScalarFn a;
    ScalarFn A;
    ScalarFn A_dot;

    double exp_alpha(double t) const;
    double exp_beta(double t) const;

    /// Copy with the lookahead weight replaced by a constant (0 gives the
    /// Bregman Lagrangian flow, 1 the single-variable flow).
    ContinuousScaling with_constant_a(double value) const;
};

/// A(t) with matching discrete sequence A_k = A(hk) and continuous scaling
/// e^α = Ȧ/A, β = ln A, a(hk) = a_k.
struct GrowthModel {
    ContinuousScaling scaling;
    double h = 1.0;
    double mu = 0.0;

    double A_k(int k) const;
    Schedule schedule(int k_max) const;
};

/// A(t) = (t+ε)²/(4L), a(t) = h(2(t+ε)+h)/(t+ε+h)². ε = 0 is accepted for
/// evaluations at t > 0 only.
GrowthModel su_growth(double eps, double L, double h);

/// A(t) = exp(√(μ/L) t) with the constant a derived from step h.
GrowthModel wilson_growth(double mu, double L, double h);

/// e^α = 2/(t+3), e^β = (t+3)²/(4L), a = 2t/(t+3)².
ContinuousScaling muehlebach_convex_scaling(double L);

/// e^α = 1/√κ, β̇ = (√κ−1)/(κ+1), a = (√κ−1)/(√κ(√κ+1)), κ = L/μ.
ContinuousScaling muehlebach_sc_scaling(double mu, double L);

/// e^α = √μ, β = √μ t, a = √(μs)/(1+2√(μs)).
ContinuousScaling chen_scaling(double mu, double s);

struct ScalingReport {
    bool ok = true;
    std::optional<double> first_violation;
    std::string reason;
};

/// Checks e^α ≥ β̇ > 0 and 0 ≤ a ≤ 1 at every grid point, plus A > 0 and
/// Ȧ > 0 when the scaling carries A.
ScalingReport validate_ideal_scaling(const ContinuousScaling& scaling, std::span<const double> grid);

/// τ(t) = ∫₀ᵗ e^{α+β} (convex, mu = 0) or ∫₀ᵗ e^α/μ (mu > 0), composite
/// Simpson on the grid refined ×4. The grid must start at 0.
MonotoneMap tau_from_scaling(const ContinuousScaling& scaling, double mu, std::span<const double> grid);

struct TimeMap {
    ScalarFn tau;
    ScalarFn tau_dot;
    ScalarFn tau_ddot;
};

/// Convex: α = ln(τ̇/(τ+C)), β = ln(τ+C). Strongly convex: α = ln(μτ̇),
/// β = μτ. The lookahead weight is a ≡ 1. Throws DomainError if τ̇ ≤ 0 at a
/// point where the result is evaluated.
ContinuousScaling scaling_from_tau(TimeMap tau, double C, double mu);

} // namespace accelflow
