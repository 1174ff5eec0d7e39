#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

namespace accelflow {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

using ValueFn = std::function<double(const Vector&)>;
using GradientFn = std::function<Vector(const Vector&)>;
using HessianVecFn = std::function<Vector(const Vector&, const Vector&)>;

/// Smooth convex objective oracle.
///
/// `L()` and `mu()` are the configured algorithm parameters. They are kept
/// apart from `true_smoothness()`, the actual Lipschitz constant of the
/// gradient, because the experiments run with L = 1 on functions whose true
/// smoothness is much smaller. Immutable after construction.
class Objective {
public:
    Objective(int dim, ValueFn value, GradientFn gradient, std::optional<HessianVecFn> hessian_vec,
              double L, double mu, double f_star = 0.0, std::optional<double> true_smoothness = {});

    int dim() const noexcept { return dim_; }
    double L() const noexcept { return L_; }
    double mu() const noexcept { return mu_; }
    double f_star() const noexcept { return f_star_; }
    double true_smoothness() const noexcept { return true_smoothness_; }

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;

    bool has_hessian_vec() const noexcept { return static_cast<bool>(hessian_vec_); }
    Vector hessian_vec(const Vector& x, const Vector& v) const;

    /// Dense symmetric matrix for quadratic instances f = ½xᵀMx.
    const std::optional<Matrix>& quadratic_matrix() const noexcept { return matrix_; }

    /// Same oracle with different configured parameters.
    Objective with_parameters(double L, double mu) const;

    GradientFn gradient_fn() const;

private:
    friend Objective make_diag_quadratic(std::span<const double>);
    friend Objective make_random_spd_quadratic(int, double, double, std::uint64_t);

    void check_dim(const Vector& x, const char* what) const;

    int dim_;
    ValueFn value_;
    GradientFn gradient_;
    std::optional<HessianVecFn> hessian_vec_;
    double L_;
    double mu_;
    double f_star_;
    double true_smoothness_;
    std::optional<Matrix> matrix_;
};

/// f(x) = Σ cᵢ xᵢ². Configured L defaults to the true smoothness 2·max cᵢ and
/// mu to 0; use `with_parameters` to set them.
Objective make_diag_quadratic(std::span<const double> coeffs);

/// f(x) = ½xᵀMx with eigenvalues drawn uniformly from [mu, L] in a random
/// orthogonal basis (QR of a seeded standard-normal matrix). Deterministic in
/// `seed`. Configured parameters are (L, mu).
Objective make_random_spd_quadratic(int n, double mu, double L, std::uint64_t seed);

/// Central-difference Hessian-vector product (∇f(x+δv) − ∇f(x−δv)) / 2δ.
Vector finite_diff_hess_vec(const Objective& f, const Vector& x, const Vector& v, double delta);

/// Bregman generator g with closed-form gradient inverse. Either Euclidean
/// (g = ½‖x‖²) or diagonal quadratic (g = Σ wᵢ xᵢ², wᵢ > 0).
class MirrorMap {
public:
    static MirrorMap euclidean();
    static MirrorMap diagonal(std::span<const double> weights);

    bool is_euclidean() const noexcept { return !weights_.has_value(); }

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;
    Vector gradient_inverse(const Vector& w) const;

private:
    MirrorMap() = default;
    void check_dim(const Vector& x) const;

    std::optional<Vector> weights_;
};

/// D_g(y, x) = g(y) − g(x) − ⟨∇g(x), y − x⟩.
double bregman_divergence(const MirrorMap& g, const Vector& y, const Vector& x);

} // namespace accelflow
