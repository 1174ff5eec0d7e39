#pragma once

#include "accelflow/flows.hpp"
#include "accelflow/trajectory.hpp"

#include <vector>

namespace accelflow {

struct IntegrationSpec {
    double t_end = 0.0;
    double h = 1.0;          // sample interval
    int substeps = 100;      // RK4 steps per sample interval
    Vector initial;          // packed state, see FlowModel::initial_state
};

/// Classical RK4 with step h/substeps, sampled at t = 0, h, 2h, … up to
/// t_end (rounded to a whole number of samples). Primary series is X (or Q);
/// aux carries "Z" when the model can form it at every sample and "V" for
/// (X, V) models. Throws DivergenceError on a non-finite state or a state
/// norm above 1e12.
Trajectory integrate(const FlowModel& model, const IntegrationSpec& spec);

/// Shortcut starting from X(0) = x0 with the model's initial velocity.
Trajectory integrate_from(const FlowModel& model, const Vector& x0, double t_end, double h, int substeps = 100);

constexpr double kDivergenceNorm = 1e12;

struct DeviationMetrics {
    std::vector<double> errors;   // ‖a_k − b_k‖ for k = 0..k_hi
    int k_lo = 0;
    int k_hi = 0;
    double window_mean = 0.0;     // mean over k_lo..k_hi inclusive
    double window_max = 0.0;
};

/// Per-sample Euclidean distance between two trajectories sampled at the
/// same times. Throws ArgumentError if either misses a sample up to k_hi or
/// the sample times differ.
DeviationMetrics deviation_metrics(const Trajectory& a, const Trajectory& b, int k_lo, int k_hi);

/// 100·(1 − cand/ref).
double reduction_pct(double mean_ref, double mean_cand);

} // namespace accelflow
