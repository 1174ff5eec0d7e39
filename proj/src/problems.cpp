#include "accelflow/problems.hpp"

#include "accelflow/error.hpp"

#include <Eigen/QR>

#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <utility>

namespace accelflow {

Objective::Objective(int dim, ValueFn value, GradientFn gradient,
                     std::optional<HessianVecFn> hessian_vec, double L, double mu, double f_star,
                     std::optional<double> true_smoothness)
    : dim_(dim),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      hessian_vec_(std::move(hessian_vec)),
      L_(L),
      mu_(mu),
      f_star_(f_star),
      true_smoothness_(true_smoothness.value_or(L)) {
    if (dim_ < 1) {
        throw ArgumentError("objective dimension must be positive");
    }
    if (!value_ || !gradient_) {
        throw ArgumentError("objective requires value and gradient oracles");
    }
    if (!(L_ > 0.0) || !std::isfinite(L_)) {
        throw ArgumentError("configured L must be positive and finite");
    }
    if (!(mu_ >= 0.0) || mu_ > L_) {
        throw ArgumentError("configured mu must satisfy 0 <= mu <= L");
    }
}

void Objective::check_dim(const Vector& x, const char* what) const {
    if (x.size() != dim_) {
        throw ArgumentError(std::string(what) + ": expected dimension " + std::to_string(dim_) +
                            ", got " + std::to_string(x.size()));
    }
}

double Objective::value(const Vector& x) const {
    check_dim(x, "value");
    return value_(x);
}

Vector Objective::gradient(const Vector& x) const {
    check_dim(x, "gradient");
    return gradient_(x);
}

Vector Objective::hessian_vec(const Vector& x, const Vector& v) const {
    if (!hessian_vec_) {
        throw CapabilityError("objective has no Hessian-vector oracle");
    }
    check_dim(x, "hessian_vec");
    check_dim(v, "hessian_vec");
    return (*hessian_vec_)(x, v);
}

Objective Objective::with_parameters(double L, double mu) const {
    Objective copy(dim_, value_, gradient_, hessian_vec_, L, mu, f_star_, true_smoothness_);
    copy.matrix_ = matrix_;
    return copy;
}

GradientFn Objective::gradient_fn() const {
    return [grad = gradient_, dim = dim_](const Vector& x) -> Vector {
        if (x.size() != dim) {
            throw ArgumentError("gradient: dimension mismatch");
        }
        return grad(x);
    };
}

Objective make_diag_quadratic(std::span<const double> coeffs) {
    if (coeffs.empty()) {
        throw ArgumentError("make_diag_quadratic: empty coefficient list");
    }
    Vector c(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!(coeffs[i] > 0.0) || !std::isfinite(coeffs[i])) {
            throw ArgumentError("make_diag_quadratic: coefficients must be positive");
        }
        c[static_cast<Eigen::Index>(i)] = coeffs[i];
    }
    const double smooth = 2.0 * c.maxCoeff();
    Objective f(
        static_cast<int>(c.size()),
        [c](const Vector& x) { return (c.array() * x.array().square()).sum(); },
        [c](const Vector& x) -> Vector { return 2.0 * c.array() * x.array(); },
        HessianVecFn([c](const Vector&, const Vector& v) -> Vector { return 2.0 * c.array() * v.array(); }),
        smooth, 0.0, 0.0, smooth);
    f.matrix_ = Matrix((2.0 * c).asDiagonal());
    return f;
}

Objective make_random_spd_quadratic(int n, double mu, double L, std::uint64_t seed) {
    if (n < 1) {
        throw ArgumentError("make_random_spd_quadratic: n must be >= 1");
    }
    if (!(mu >= 0.0) || !(mu < L)) {
        throw ArgumentError("make_random_spd_quadratic: requires 0 <= mu < L");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> eig(mu, L);
    std::normal_distribution<double> normal(0.0, 1.0);

    Vector lambda(n);
    for (int i = 0; i < n; ++i) {
        lambda[i] = eig(rng);
    }
    Matrix gauss(n, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            gauss(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(gauss);
    const Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
    Matrix M = Q * lambda.asDiagonal() * Q.transpose();
    M = (0.5 * (M + M.transpose())).eval();

    auto shared = std::make_shared<const Matrix>(M);
    Objective f(
        n,
        [shared](const Vector& x) { return 0.5 * x.dot(*shared * x); },
        [shared](const Vector& x) -> Vector { return *shared * x; },
        HessianVecFn([shared](const Vector&, const Vector& v) -> Vector { return *shared * v; }),
        L, mu, 0.0, lambda.maxCoeff());
    f.matrix_ = std::move(M);
    return f;
}

Vector finite_diff_hess_vec(const Objective& f, const Vector& x, const Vector& v, double delta) {
    if (!(delta > 0.0)) {
        throw ArgumentError("finite_diff_hess_vec: delta must be positive");
    }
    if (v.size() != f.dim()) {
        throw ArgumentError("finite_diff_hess_vec: dimension mismatch");
    }
    return (f.gradient(x + delta * v) - f.gradient(x - delta * v)) / (2.0 * delta);
}

MirrorMap MirrorMap::euclidean() { return MirrorMap(); }

MirrorMap MirrorMap::diagonal(std::span<const double> weights) {
    if (weights.empty()) {
        throw ArgumentError("MirrorMap::diagonal: empty weights");
    }
    Vector w(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0)) {
            throw ArgumentError("MirrorMap::diagonal: weights must be positive");
        }
        w[static_cast<Eigen::Index>(i)] = weights[i];
    }
    MirrorMap g;
    g.weights_ = std::move(w);
    return g;
}

void MirrorMap::check_dim(const Vector& x) const {
    if (weights_ && x.size() != weights_->size()) {
        throw ArgumentError("MirrorMap: dimension mismatch");
    }
}

double MirrorMap::value(const Vector& x) const {
    check_dim(x);
    if (!weights_) {
        return 0.5 * x.squaredNorm();
    }
    return (weights_->array() * x.array().square()).sum();
}

Vector MirrorMap::gradient(const Vector& x) const {
    check_dim(x);
    if (!weights_) {
        return x;
    }
    return 2.0 * weights_->array() * x.array();
}

Vector MirrorMap::gradient_inverse(const Vector& w) const {
    check_dim(w);
    if (!weights_) {
        return w;
    }
    return w.array() / (2.0 * weights_->array());
}

double bregman_divergence(const MirrorMap& g, const Vector& y, const Vector& x) {
    if (y.size() != x.size()) {
        throw ArgumentError("bregman_divergence: dimension mismatch");
    }
    return g.value(y) - g.value(x) - g.gradient(x).dot(y - x);
}

} // namespace accelflow
