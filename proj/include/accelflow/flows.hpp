#pragma once

#include "accelflow/coefficients.hpp"
#include "accelflow/problems.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace accelflow {

enum class ModelKind {
    GOdeC,
    GOdeUC,
    OdeC,
    OdeSC,
    Su,
    Wilson,
    MuehlebachC,
    MuehlebachSC,
    ShiC,
    ShiSC,
    ChenSC,
    BlfC,
    BlfSC,
    Qgf,
    Gf,
    OdeScTime,
    TimeXZ,
};

/// (X, V) with V = Ẋ, (X, Z) with Z = X + e^{−α}Ẋ, or a single variable Q.
enum class Representation { PositionVelocity, PositionDual, Single };

std::string_view model_name(ModelKind kind);
std::optional<ModelKind> model_from_name(std::string_view name);
const std::vector<ModelKind>& all_models();

/// True for models only defined for a strongly convex objective (mu > 0).
bool model_requires_mu(ModelKind kind);

struct FlowState {
    double t = 0.0;
    Vector primary;
    std::optional<Vector> secondary;
};

/// Model-specific constants for catalog construction. μ and L default to the
/// objective's configured parameters.
struct FlowOptions {
    double eps = 1.0;                   // Su growth offset
    double h = 1.0;                     // step the lookahead weight is derived from
    double s = 1.0;                     // step size in the Shi / Chen models
    std::optional<double> mu;
    std::optional<double> L;
    std::string scaling = "";           // G-ODE-C / G-ODE-UC: su, wilson, muehlebach-c, muehlebach-sc, chen
    std::optional<double> a;            // constant lookahead weight override
    bool fd_hessian = true;             // allow finite-difference ∇²f(X)V for the Shi models
};

/// Right-hand side of one continuous-time model, acting on a packed state
/// vector: [X; V], [X; ∇g(Z)] or [∇g(Q)]. For the (X, Z) models the packed
/// secondary is the dual variable w = ∇g(Z); `unpack` and `pack` translate.
/// Immutable; rhs is safe to call concurrently.
class FlowModel {
public:
    /// G-ODE-C (mu = 0) or G-ODE-UC (mu > 0) with arbitrary scaling and g.
    static FlowModel generalized(const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                                 double mu);

    /// Catalog lookup by kind.
    static FlowModel catalog(ModelKind kind, const Objective& f, const FlowOptions& options = {});

    /// d/dt ∇g(Q) = −rate(t)∇f(Q); rate ≡ 1 gives the quasi-gradient flow.
    static FlowModel quasi_gradient(const Objective& f, const MirrorMap& g, ScalarFn rate = {});

    ModelKind kind() const;
    std::string_view name() const;
    Representation representation() const;
    int dim() const;
    int state_dim() const;
    double mu() const;

    const Objective& objective() const;
    const MirrorMap& mirror() const;

    /// Coefficient functions when the model is (or approximates) a G-ODE
    /// instance; empty for the Shi models and gradient flows.
    const std::optional<ContinuousScaling>& scaling() const;

    Vector rhs(double t, const Vector& state) const;
    Vector lookahead(double t, const Vector& state) const;

    /// Packed initial state for X(0) = x0 with the model's initial velocity
    /// (zero except for SHI-C, see the implementation).
    Vector initial_state(const Vector& x0) const;

    FlowState unpack(double t, const Vector& state) const;
    Vector pack(const FlowState& state) const;

    /// X for two-variable models, Q for single-variable ones.
    Vector position(const Vector& state) const;

    /// Z(t) when it can be formed (from the state or via the scaling).
    std::optional<Vector> dual_point(double t, const Vector& state) const;

    /// Z = X + e^{−α}V or V = e^{α}(Z − X); `from` names the representation of `state`.
    FlowState convert(const FlowState& state, Representation from, Representation to) const;

    struct Impl;

private:
    explicit FlowModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

/// Z = X + e^{−α(t)}V.
Vector velocity_to_dual(const ContinuousScaling& scaling, double t, const Vector& X, const Vector& V);

/// V = e^{α(t)}(Z − X).
Vector dual_to_velocity(const ContinuousScaling& scaling, double t, const Vector& X, const Vector& Z);

} // namespace accelflow
