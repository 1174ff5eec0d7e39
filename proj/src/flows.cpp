#include "accelflow/flows.hpp"

#include "accelflow/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace accelflow {

namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 17> kNames{{
    {ModelKind::GOdeC, "G-ODE-C"},
    {ModelKind::GOdeUC, "G-ODE-UC"},
    {ModelKind::OdeC, "ODE-C"},
    {ModelKind::OdeSC, "ODE-SC"},
    {ModelKind::Su, "SU"},
    {ModelKind::Wilson, "WILSON"},
    {ModelKind::MuehlebachC, "MUEHLEBACH-C"},
    {ModelKind::MuehlebachSC, "MUEHLEBACH-SC"},
    {ModelKind::ShiC, "SHI-C"},
    {ModelKind::ShiSC, "SHI-SC"},
    {ModelKind::ChenSC, "CHEN-SC"},
    {ModelKind::BlfC, "BLF-C"},
    {ModelKind::BlfSC, "BLF-SC"},
    {ModelKind::Qgf, "QGF"},
    {ModelKind::Gf, "GF"},
    {ModelKind::OdeScTime, "ODE-SC-TIME"},
    {ModelKind::TimeXZ, "TIME-XZ"},
}};

// How rhs is evaluated.
enum class Form {
    Generalized,     // packed [X; ∇g(Z)], G-ODE-C / G-ODE-UC
    SecondOrder,     // packed [X; V], model-specific acceleration
    TimeXZ,          // packed [X; Z], the time-reparametrized strongly convex pair
    Single,          // packed [∇g(Q)]
};

} // namespace

struct FlowModel::Impl {
    ModelKind kind;
    Form form;
    Objective f;
    MirrorMap g;
    std::optional<ContinuousScaling> scaling;
    double mu = 0.0;
    double L = 1.0;
    double s = 1.0;
    double const_a = 0.0;     // ODE-SC-TIME lookahead weight
    bool fd_hessian = true;
    ScalarFn rate;            // QGF time-rate factor

    int n() const { return f.dim(); }

    void check_state(const Vector& state) const {
        const int expect = form == Form::Single ? n() : 2 * n();
        if (state.size() != expect) {
            throw ArgumentError(std::string(model_name(kind)) + ": state has dimension " +
                                std::to_string(state.size()) + ", expected " + std::to_string(expect));
        }
    }

    void check_time(double t) const {
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw DomainError(std::string(model_name(kind)) + ": time " + std::to_string(t) +
                              " lies before the start of the model's domain");
        }
    }

    Vector hess_vec(const Vector& x, const Vector& v) const {
        if (f.has_hessian_vec()) {
            return f.hessian_vec(x, v);
        }
        if (!fd_hessian) {
            throw CapabilityError(std::string(model_name(kind)) +
                                  " needs a Hessian-vector product; none available and finite differences disabled");
        }
        return finite_diff_hess_vec(f, x, v, 1e-6 * (1.0 + x.norm()));
    }

    Vector generalized_rhs(double t, const Vector& state) const {
        const int d = n();
        const ContinuousScaling& sc = *scaling;
        const Vector X = state.head(d);
        const Vector w = state.tail(d);
        const Vector Z = g.gradient_inverse(w);
        const double a = sc.a(t);
        const Vector Y = X + a * (Z - X);
        const Vector gy = f.gradient(Y);
        Vector out(2 * d);

        const double ea = sc.exp_alpha(t);
        if (std::isfinite(ea)) {
            out.head(d) = ea * (Z - X);
        } else if ((Z - X).isZero(0.0)) {
            // e^α ~ p/t at the start with Z(0) = X(0): Ẋ(0) = pŻ(0)/(1+p) and Ż(0) = 0 below.
            out.head(d).setZero();
        } else {
            throw DomainError(std::string(model_name(kind)) + ": singular e^alpha at t=" + std::to_string(t) +
                              " with Z != X");
        }

        if (mu == 0.0) {
            const double c = sc.A_dot ? sc.A_dot(t) : std::exp(sc.alpha(t) + sc.beta(t));
            out.tail(d) = -c * gy;
        } else {
            out.tail(d) = -sc.beta_dot(t) * (w - g.gradient(Y)) - (ea / mu) * gy;
        }
        return out;
    }

    Vector second_order_rhs(double t, const Vector& state) const {
        const int d = n();
        const Vector X = state.head(d);
        const Vector V = state.tail(d);
        Vector acc;
        switch (kind) {
        case ModelKind::Su:
            if (t == 0.0) {
                if (!V.isZero(0.0)) {
                    throw DomainError("SU: the start t=0 requires zero velocity");
                }
                acc = -f.gradient(X) / (4.0 * L);
            } else {
                acc = -(3.0 / t) * V - f.gradient(X) / L;
            }
            break;
        case ModelKind::Wilson:
            acc = -2.0 * std::sqrt(mu / L) * V - f.gradient(X) / L;
            break;
        case ModelKind::MuehlebachC: {
            const double c = 3.0 / (t + 3.0);
            acc = -c * V - f.gradient(X + (t / (t + 3.0)) * V) / L;
            break;
        }
        case ModelKind::MuehlebachSC: {
            const double sk = std::sqrt(L / mu);
            acc = -(2.0 / (sk + 1.0)) * V - f.gradient(X + ((sk - 1.0) / (sk + 1.0)) * V) / L;
            break;
        }
        case ModelKind::ShiC: {
            const double rs = std::sqrt(s);
            const Vector gx = f.gradient(X);
            if (t == 0.0) {
                const Vector v0 = -0.5 * rs * gx;
                if (!(V - v0).isZero(1e-12 * (1.0 + v0.norm()))) {
                    throw DomainError("SHI-C: the start t=0 requires V(0) = -(sqrt(s)/2) grad f(X(0))");
                }
                acc = -(gx + 2.5 * rs * hess_vec(X, V)) / 4.0;
            } else {
                acc = -(3.0 / t) * V - rs * hess_vec(X, V) - (1.0 + 1.5 * rs / t) * gx;
            }
            break;
        }
        case ModelKind::ShiSC: {
            const double rs = std::sqrt(s);
            acc = -2.0 * std::sqrt(mu) * V - rs * hess_vec(X, V) - (1.0 + std::sqrt(mu * s)) * f.gradient(X);
            break;
        }
        case ModelKind::ChenSC: {
            const double rms = std::sqrt(mu * s);
            acc = -2.0 * std::sqrt(mu) * V - f.gradient(X + (std::sqrt(s) / (1.0 + 2.0 * rms)) * V);
            break;
        }
        default:
            throw ArgumentError("internal: not a second-order model");
        }
        Vector out(2 * d);
        out.head(d) = V;
        out.tail(d) = acc;
        return out;
    }

    Vector time_xz_rhs(const Vector& state) const {
        const int d = n();
        const Vector X = state.head(d);
        const Vector Z = state.tail(d);
        const double r = std::sqrt(mu / L);
        const double denom = std::sqrt(mu * L);
        Vector out(2 * d);
        out.head(d) = r * (Z - X);
        if (kind == ModelKind::TimeXZ) {
            out.tail(d) = -f.gradient(Z) / denom;
        } else {
            const Vector Y = X + const_a * (Z - X);
            out.tail(d) = -(1.0 - const_a) * out.head(d) - f.gradient(Y) / denom;
        }
        return out;
    }

    Vector single_rhs(double t, const Vector& state) const {
        const Vector Q = kind == ModelKind::Gf ? state : g.gradient_inverse(state);
        if (kind == ModelKind::Gf) {
            return -f.gradient(Q);
        }
        if (rate) {
            return -rate(t) * f.gradient(Q);
        }
        return -f.gradient(Q);
    }
};

std::string_view model_name(ModelKind kind) {
    for (const auto& [k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<ModelKind> model_from_name(std::string_view name) {
    for (const auto& [k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

const std::vector<ModelKind>& all_models() {
    static const std::vector<ModelKind> models = [] {
        std::vector<ModelKind> v;
        for (const auto& entry : kNames) {
            v.push_back(entry.first);
        }
        return v;
    }();
    return models;
}

bool model_requires_mu(ModelKind kind) {
    switch (kind) {
    case ModelKind::GOdeUC:
    case ModelKind::OdeSC:
    case ModelKind::Wilson:
    case ModelKind::MuehlebachSC:
    case ModelKind::ShiSC:
    case ModelKind::ChenSC:
    case ModelKind::BlfSC:
    case ModelKind::OdeScTime:
    case ModelKind::TimeXZ:
        return true;
    default:
        return false;
    }
}

Vector velocity_to_dual(const ContinuousScaling& scaling, double t, const Vector& X, const Vector& V) {
    if (X.size() != V.size()) {
        throw ArgumentError("velocity_to_dual: dimension mismatch");
    }
    const double inv = std::exp(-scaling.alpha(t));
    if (!std::isfinite(inv)) {
        throw DomainError("velocity_to_dual: alpha is not finite at t=" + std::to_string(t));
    }
    return X + inv * V;
}

Vector dual_to_velocity(const ContinuousScaling& scaling, double t, const Vector& X, const Vector& Z) {
    if (X.size() != Z.size()) {
        throw ArgumentError("dual_to_velocity: dimension mismatch");
    }
    const double ea = scaling.exp_alpha(t);
    if (!std::isfinite(ea)) {
        throw DomainError("dual_to_velocity: alpha is not finite at t=" + std::to_string(t));
    }
    return ea * (Z - X);
}

FlowModel FlowModel::generalized(const Objective& f, const MirrorMap& g, const ContinuousScaling& scaling,
                                 double mu) {
    if (!(mu >= 0.0)) {
        throw ArgumentError("generalized flow: mu must be non-negative");
    }
    if (!scaling.alpha || !scaling.beta || !scaling.beta_dot || !scaling.a) {
        throw ArgumentError("generalized flow: scaling is missing alpha, beta, beta_dot or a");
    }
    auto impl = std::make_shared<Impl>(Impl{mu > 0.0 ? ModelKind::GOdeUC : ModelKind::GOdeC, Form::Generalized, f, g,
                                            scaling, mu, f.L(), 1.0, 0.0, true, {}});
    return FlowModel(std::move(impl));
}

FlowModel FlowModel::quasi_gradient(const Objective& f, const MirrorMap& g, ScalarFn rate) {
    auto impl = std::make_shared<Impl>(
        Impl{ModelKind::Qgf, Form::Single, f, g, std::nullopt, f.mu(), f.L(), 1.0, 0.0, true, std::move(rate)});
    return FlowModel(std::move(impl));
}

FlowModel FlowModel::catalog(ModelKind kind, const Objective& f, const FlowOptions& o) {
    const double mu = o.mu.value_or(f.mu());
    const double L = o.L.value_or(f.L());
    if (!(L > 0.0) || !(mu >= 0.0) || !(mu <= L)) {
        throw ArgumentError("flow model: requires L > 0 and 0 <= mu <= L");
    }
    if (model_requires_mu(kind) && !(mu > 0.0)) {
        throw ArgumentError(std::string(model_name(kind)) + " requires mu > 0");
    }
    if (!(o.s > 0.0) || !(o.h > 0.0)) {
        throw ArgumentError("flow model: s and h must be positive");
    }
    Impl impl{kind, Form::SecondOrder, f, MirrorMap::euclidean(), std::nullopt, mu, L, o.s, 0.0, o.fd_hessian, {}};

    auto named_scaling = [&](const std::string& name) -> ContinuousScaling {
        if (name == "su") {
            return su_growth(o.eps, L, o.h).scaling;
        }
        if (name == "wilson") {
            return wilson_growth(mu, L, o.h).scaling;
        }
        if (name == "muehlebach-c") {
            return muehlebach_convex_scaling(L);
        }
        if (name == "muehlebach-sc") {
            return muehlebach_sc_scaling(mu, L);
        }
        if (name == "chen") {
            return chen_scaling(mu, o.s);
        }
        throw ArgumentError("unknown scaling '" + name + "'");
    };
    auto apply_a = [&](ContinuousScaling sc) { return o.a ? sc.with_constant_a(*o.a) : sc; };

    switch (kind) {
    case ModelKind::GOdeC:
    case ModelKind::OdeC:
    case ModelKind::BlfC: {
        impl.form = Form::Generalized;
        impl.mu = 0.0;
        const std::string name = kind == ModelKind::GOdeC && !o.scaling.empty() ? o.scaling : "su";
        impl.scaling = named_scaling(name);
        impl.scaling = kind == ModelKind::BlfC ? impl.scaling->with_constant_a(0.0) : apply_a(*impl.scaling);
        break;
    }
    case ModelKind::GOdeUC:
    case ModelKind::OdeSC:
    case ModelKind::BlfSC: {
        impl.form = Form::Generalized;
        const std::string name = kind == ModelKind::GOdeUC && !o.scaling.empty() ? o.scaling : "wilson";
        impl.scaling = named_scaling(name);
        impl.scaling = kind == ModelKind::BlfSC ? impl.scaling->with_constant_a(0.0) : apply_a(*impl.scaling);
        break;
    }
    case ModelKind::Su:
        impl.scaling = su_growth(0.0, L, o.h).scaling.with_constant_a(0.0);
        break;
    case ModelKind::Wilson:
        impl.scaling = wilson_growth(mu, L, o.h).scaling.with_constant_a(0.0);
        break;
    case ModelKind::MuehlebachC:
        impl.scaling = muehlebach_convex_scaling(L);
        break;
    case ModelKind::MuehlebachSC:
        impl.scaling = muehlebach_sc_scaling(mu, L);
        break;
    case ModelKind::ChenSC:
        impl.scaling = chen_scaling(mu, o.s);
        break;
    case ModelKind::ShiC:
    case ModelKind::ShiSC:
        if (!f.has_hessian_vec() && !o.fd_hessian) {
            throw CapabilityError(std::string(model_name(kind)) +
                                  " needs a Hessian-vector product; none available and finite differences disabled");
        }
        break;
    case ModelKind::OdeScTime: {
        impl.form = Form::TimeXZ;
        const GrowthModel w = wilson_growth(mu, L, o.h);
        impl.const_a = o.a.value_or(w.scaling.a(0.0));
        if (!(impl.const_a >= 0.0 && impl.const_a <= 1.0)) {
            throw ArgumentError("ODE-SC-TIME: lookahead weight must lie in [0, 1]");
        }
        impl.scaling = w.scaling.with_constant_a(impl.const_a);
        break;
    }
    case ModelKind::TimeXZ:
        impl.form = Form::TimeXZ;
        impl.const_a = 1.0;
        impl.scaling = wilson_growth(mu, L, o.h).scaling.with_constant_a(1.0);
        break;
    case ModelKind::Qgf:
        impl.form = Form::Single;
        break;
    case ModelKind::Gf:
        impl.form = Form::Single;
        break;
    }
    return FlowModel(std::make_shared<Impl>(std::move(impl)));
}

ModelKind FlowModel::kind() const { return impl_->kind; }
std::string_view FlowModel::name() const { return model_name(impl_->kind); }

Representation FlowModel::representation() const {
    switch (impl_->form) {
    case Form::Generalized:
    case Form::TimeXZ:
        return Representation::PositionDual;
    case Form::SecondOrder:
        return Representation::PositionVelocity;
    case Form::Single:
        return Representation::Single;
    }
    return Representation::Single;
}

int FlowModel::dim() const { return impl_->n(); }
int FlowModel::state_dim() const { return impl_->form == Form::Single ? impl_->n() : 2 * impl_->n(); }
double FlowModel::mu() const { return impl_->mu; }
const Objective& FlowModel::objective() const { return impl_->f; }
const MirrorMap& FlowModel::mirror() const { return impl_->g; }
const std::optional<ContinuousScaling>& FlowModel::scaling() const { return impl_->scaling; }

Vector FlowModel::rhs(double t, const Vector& state) const {
    const Impl& m = *impl_;
    m.check_state(state);
    m.check_time(t);
    switch (m.form) {
    case Form::Generalized: return m.generalized_rhs(t, state);
    case Form::SecondOrder: return m.second_order_rhs(t, state);
    case Form::TimeXZ: return m.time_xz_rhs(state);
    case Form::Single: return m.single_rhs(t, state);
    }
    throw ArgumentError("internal: unknown form");
}

Vector FlowModel::lookahead(double t, const Vector& state) const {
    const Impl& m = *impl_;
    m.check_state(state);
    m.check_time(t);
    const int d = m.n();
    switch (m.form) {
    case Form::Single:
        throw CapabilityError(std::string(name()) + " has no lookahead point");
    case Form::Generalized: {
        const Vector X = state.head(d);
        const Vector Z = m.g.gradient_inverse(state.tail(d));
        return X + m.scaling->a(t) * (Z - X);
    }
    case Form::TimeXZ: {
        const Vector X = state.head(d);
        return X + m.const_a * (state.tail(d) - X);
    }
    case Form::SecondOrder:
        break;
    }
    const Vector X = state.head(d);
    const Vector V = state.tail(d);
    switch (m.kind) {
    case ModelKind::Su:
    case ModelKind::Wilson:
        return X;
    case ModelKind::MuehlebachC:
        return X + (t / (t + 3.0)) * V;
    case ModelKind::MuehlebachSC: {
        const double sk = std::sqrt(m.L / m.mu);
        return X + ((sk - 1.0) / (sk + 1.0)) * V;
    }
    case ModelKind::ShiC:
    case ModelKind::ShiSC:
        return X + std::sqrt(m.s) * V;
    case ModelKind::ChenSC:
        return X + (std::sqrt(m.s) / (1.0 + 2.0 * std::sqrt(m.mu * m.s))) * V;
    default:
        throw ArgumentError("internal: not a second-order model");
    }
}

Vector FlowModel::initial_state(const Vector& x0) const {
    const Impl& m = *impl_;
    if (x0.size() != m.n()) {
        throw ArgumentError(std::string(name()) + ": x0 dimension mismatch");
    }
    switch (m.form) {
    case Form::Single:
        return m.kind == ModelKind::Gf ? x0 : m.g.gradient(x0);
    case Form::Generalized: {
        Vector out(2 * m.n());
        out << x0, m.g.gradient(x0);
        return out;
    }
    case Form::TimeXZ: {
        Vector out(2 * m.n());
        out << x0, x0;
        return out;
    }
    case Form::SecondOrder:
        break;
    }
    Vector out = Vector::Zero(2 * m.n());
    out.head(m.n()) = x0;
    if (m.kind == ModelKind::ShiC) {
        // The 3√s/(2t) forcing is only bounded at t = 0 on this velocity.
        out.tail(m.n()) = -0.5 * std::sqrt(m.s) * m.f.gradient(x0);
    }
    return out;
}

FlowState FlowModel::unpack(double t, const Vector& state) const {
    const Impl& m = *impl_;
    m.check_state(state);
    const int d = m.n();
    switch (m.form) {
    case Form::Single:
        return FlowState{t, m.kind == ModelKind::Gf ? state : m.g.gradient_inverse(state), std::nullopt};
    case Form::Generalized:
        return FlowState{t, state.head(d), m.g.gradient_inverse(state.tail(d))};
    case Form::TimeXZ:
    case Form::SecondOrder:
        return FlowState{t, state.head(d), state.tail(d)};
    }
    throw ArgumentError("internal: unknown form");
}

Vector FlowModel::pack(const FlowState& fs) const {
    const Impl& m = *impl_;
    const int d = m.n();
    if (fs.primary.size() != d) {
        throw ArgumentError(std::string(name()) + ": primary dimension mismatch");
    }
    if (m.form == Form::Single) {
        return m.kind == ModelKind::Gf ? fs.primary : m.g.gradient(fs.primary);
    }
    if (!fs.secondary || fs.secondary->size() != d) {
        throw ArgumentError(std::string(name()) + ": secondary component missing or mis-sized");
    }
    Vector out(2 * d);
    out.head(d) = fs.primary;
    out.tail(d) = m.form == Form::Generalized ? m.g.gradient(*fs.secondary) : *fs.secondary;
    return out;
}

Vector FlowModel::position(const Vector& state) const {
    const Impl& m = *impl_;
    m.check_state(state);
    if (m.form == Form::Single) {
        return m.kind == ModelKind::Gf ? state : m.g.gradient_inverse(state);
    }
    return state.head(m.n());
}

std::optional<Vector> FlowModel::dual_point(double t, const Vector& state) const {
    const Impl& m = *impl_;
    m.check_state(state);
    const int d = m.n();
    switch (m.form) {
    case Form::Single:
        return position(state);
    case Form::Generalized:
        return m.g.gradient_inverse(state.tail(d));
    case Form::TimeXZ:
        return Vector(state.tail(d));
    case Form::SecondOrder:
        break;
    }
    if (!m.scaling) {
        return std::nullopt;
    }
    const double inv = std::exp(-m.scaling->alpha(t));
    if (!std::isfinite(inv)) {
        return std::nullopt;
    }
    return Vector(state.head(d) + inv * state.tail(d));
}

FlowState FlowModel::convert(const FlowState& fs, Representation from, Representation target) const {
    const Impl& m = *impl_;
    if (m.form == Form::Single || from == Representation::Single || target == Representation::Single) {
        throw CapabilityError(std::string(name()) + ": single-variable states have no alternate representation");
    }
    if (!fs.secondary) {
        throw ArgumentError(std::string(name()) + ": state has no secondary component");
    }
    if (target == from) {
        return fs;
    }
    if (!m.scaling) {
        throw CapabilityError(std::string(name()) + ": no alpha(t) available to change representation");
    }
    if (target == Representation::PositionDual) {
        return FlowState{fs.t, fs.primary, velocity_to_dual(*m.scaling, fs.t, fs.primary, *fs.secondary)};
    }
    return FlowState{fs.t, fs.primary, dual_to_velocity(*m.scaling, fs.t, fs.primary, *fs.secondary)};
}

} // namespace accelflow
