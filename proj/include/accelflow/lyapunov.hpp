#pragma once

#include "accelflow/coefficients.hpp"
#include "accelflow/problems.hpp"
#include "accelflow/trajectory.hpp"

#include <cstddef>
#include <vector>

namespace accelflow {

/// mu = 0: D_g(x*, Z) + e^{β(t)}(f(X) − f*).
/// mu > 0: e^{β(t)}(μD_g(x*, Z) + f(X) − f*).   x* = 0.
double energy_general(const Vector& X, const Vector& Z, double t, const Objective& f, const MirrorMap& g,
                      const ScalarFn& beta, double mu);

/// energy_general with X = Z.
double energy_single(const Vector& Z, double t, const Objective& f, const MirrorMap& g, const ScalarFn& beta,
                     double mu);

struct Violation {
    std::size_t index = 0;
    double time = 0.0;
    double magnitude = 0.0;
};

struct EnergyTrace {
    std::vector<double> times;
    std::vector<double> energy;
    std::vector<double> bound;          // e^{−β(t)}E(0)
    std::vector<double> objective_gap;  // f − f* at the point the bound constrains
    std::vector<Violation> monotonicity;
    std::vector<Violation> rate;

    bool ok() const noexcept { return monotonicity.empty() && rate.empty(); }
};

enum class EnergyForm { General, Single };

/// Evaluates the energy at every sample (X from `points`, Z from aux "Z").
/// A monotonicity violation is an increase above tol_rel·(1 + |E|); a rate
/// violation is f − f* > e^{−β(t)}E(0)·(1 + tol_rel). With EnergyForm::Single
/// the bound is checked on f(Z). Throws ArgumentError if the trajectory has
/// no "Z" series.
EnergyTrace certify(const Trajectory& traj, const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                    double mu, EnergyForm form, double tol_rel);

} // namespace accelflow
