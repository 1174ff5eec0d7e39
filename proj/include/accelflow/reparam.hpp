#pragma once

#include "accelflow/coefficients.hpp"
#include "accelflow/lyapunov.hpp"
#include "accelflow/monotone_map.hpp"
#include "accelflow/problems.hpp"
#include "accelflow/trajectory.hpp"

#include <optional>
#include <vector>

namespace accelflow {

/// Piecewise cubic through (times, values) with Catmull-Rom tangents
/// (one-sided at the ends). Throws DomainError outside [times.front(), times.back()].
Vector interpolate_cubic(const std::vector<double>& times, const std::vector<Vector>& values, double t);

/// Q(u) = Z(τ⁻¹(u)) at each requested u, where `z` carries Z as its primary
/// series. Throws DomainError when τ⁻¹(u) falls outside the sampled range.
Trajectory reparametrize(const Trajectory& z, const MonotoneMap& tau, const std::vector<double>& out_times,
                         const Objective& f);

struct QrSequences {
    std::vector<Vector> q;
    std::vector<Vector> r;
};

/// q_{k+1} = q_k − ∇f(q_k), r_{k+1} = (μq_{k+1} + r_k)/(1 + μ), q₀ = r₀ = x₀.
QrSequences qr_discretize(const Objective& f, double mu, const Vector& x0, int k_max);

struct TimeXZReport {
    double sample_interval = 0.0;   // τ⁻¹(1) = √(μL)
    Trajectory time_xz;             // sampled at k·sample_interval
    Trajectory ode_sc_time;
    QrSequences qr;
    std::vector<double> gap;        // ‖X(τ⁻¹(k)) − r_k‖
    double max_gap = 0.0;
    bool f_monotone = true;         // f(X) under TIME-XZ non-increasing
    std::optional<int> first_increase;
};

/// Integrates TIME-XZ and ODE-SC-TIME from X(0) = Z(0) = x0 up to t_end and
/// compares TIME-XZ against the q/r scheme at t = k√(μL).
TimeXZReport verify_time_xz(const Objective& f, double mu, const Vector& x0, double t_end, int substeps = 10);

struct EquivalenceReport {
    Trajectory generalized;      // a ≡ 1 flow in t, primary series Z
    Trajectory direct;           // QGF integrated in u = τ(t)
    Trajectory reparametrized;   // Z(τ⁻¹(u)) at the direct samples
    std::vector<double> tau;     // τ(t) at the generalized samples
    double sup_gap = 0.0;
};

/// Integrates the a ≡ 1 instance of the scaling over [0, t_end] with sample
/// interval h, builds τ, integrates QGF on [0, τ(t_end)] with `samples`
/// intervals and reports sup_u ‖Q(u) − Z(τ⁻¹(u))‖.
EquivalenceReport check_qgf_equivalence(const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                                        double mu, const Vector& x0, double t_end, double h, int samples,
                                        int substeps = 100);

/// Corollary-type bounds on f − f* sampled against τ: E0/τ (mu = 0, τ > 0) or
/// E0·e^{−μτ} (mu > 0), each allowed a relative slack tol_rel.
std::vector<Violation> check_tau_rate(const std::vector<double>& tau, const std::vector<double>& gap, double mu,
                                      double E0, double tol_rel);

} // namespace accelflow
