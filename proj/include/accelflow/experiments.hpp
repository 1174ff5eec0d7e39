#pragma once

#include "accelflow/config.hpp"
#include "accelflow/csv.hpp"
#include "accelflow/flows.hpp"
#include "accelflow/integrate.hpp"
#include "accelflow/lyapunov.hpp"
#include "accelflow/trajectory.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace accelflow {

struct ManifestEntry {
    std::string panel;
    std::string experiment;
    std::string file;
};

std::string manifest_text(const std::vector<ManifestEntry>& entries);

struct ExperimentResult {
    std::string experiment;
    std::vector<ManifestEntry> manifest;
    std::vector<MetricRow> metrics;
    std::vector<std::string> summary;
    std::vector<std::string> diverged;
    int requested = 0;

    bool all_diverged() const noexcept {
        return requested > 0 && static_cast<int>(diverged.size()) == requested;
    }
};

/// Runs the experiment, writes its CSVs and `manifest.txt` into spec.out_dir.
/// Per-model divergence is recorded, not thrown.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Flow integrated over [0, k_max·h] at sample interval h, with an "energy"
/// channel for models in the generalized family.
Trajectory simulate_model(const Objective& f, ModelKind kind, const Vector& x0, const ExperimentSpec& spec,
                          double mu);

/// EXP1 / EXP2 without file output.
struct FidelityResult {
    std::map<std::string, Trajectory> methods;
    std::map<std::string, Trajectory> models;
    std::vector<std::string> method_order;
    std::vector<std::string> model_order;
    std::vector<MetricRow> metrics;
    std::vector<std::string> diverged;
    int window_lo = 0;
    int window_hi = 0;
};

FidelityResult model_fidelity(const ExperimentSpec& spec, bool strongly_convex);

/// One h of an ODE-versus-BLF sweep against the NAG-C / NAG-SC iterates.
struct SweepRow {
    double h = 1.0;
    bool strongly_convex = false;
    DeviationMetrics ode;
    DeviationMetrics blf;
    double max_early_ode = 0.0;   // max over t ≤ early_time
    double max_early_blf = 0.0;
};

/// Horizon and window are in time units; the internal RK4 step is
/// 1/steps_per_unit_time (at least one step per sample).
std::vector<SweepRow> h_sweep(const Objective& f, const Vector& x0, bool strongly_convex,
                              const std::vector<double>& hs, double horizon, double window_lo_time,
                              double early_time, double eps, int steps_per_unit_time);

struct CertificationRow {
    std::string problem;
    std::string model;
    std::string scaling;
    double a = -1.0;                 // constant lookahead weight, −1 when a(t) varies
    std::size_t samples = 0;
    std::size_t monotonicity_violations = 0;
    std::size_t rate_violations = 0;
    std::size_t objective_increases = 0;   // f(Z) rises, only for a ≡ 1
    bool ok() const noexcept {
        return monotonicity_violations == 0 && rate_violations == 0 && objective_increases == 0;
    }
};

/// Lyapunov certification of the G-ODE instances (and a ≡ 1 variants) on one
/// problem over t ∈ [0, horizon].
std::vector<CertificationRow> certify_catalog(ProblemKind problem, const ExperimentSpec& spec, double horizon,
                                              double tol_rel);

} // namespace accelflow
