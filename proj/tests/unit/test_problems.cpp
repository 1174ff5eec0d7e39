#include "accelflow/error.hpp"
#include "accelflow/problems.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

using namespace accelflow;
using oracle::vec;

TEST_CASE("bregman divergence of the euclidean generator is half the squared distance") {
    const MirrorMap g = MirrorMap::euclidean();
    CHECK(bregman_divergence(g, vec({1, 0}), vec({0, 0})) == doctest::Approx(0.5));
    CHECK(bregman_divergence(g, vec({0.3, -2}), vec({0.3, -2})) == 0.0);
}

TEST_CASE("bregman divergence of a diagonal generator") {
    const std::array<double, 2> w{1.0, 2.0};
    const MirrorMap g = MirrorMap::diagonal(w);
    CHECK(bregman_divergence(g, vec({1, 1}), vec({0, 0})) == doctest::Approx(3.0));
    CHECK(bregman_divergence(g, vec({-1, 4}), vec({-1, 4})) == 0.0);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Vector y = oracle::random_vector(rng, 2);
        const Vector x = oracle::random_vector(rng, 2);
        CHECK(bregman_divergence(g, y, x) == doctest::Approx(oracle::bregman_by_definition(g, y, x)));
        CHECK(bregman_divergence(g, y, x) >= 0.0);
        CHECK((g.gradient_inverse(g.gradient(x)) - x).norm() < 1e-15);
    }
}

TEST_CASE("mirror map rejects bad input") {
    const std::array<double, 2> bad{1.0, 0.0};
    CHECK_THROWS_AS(MirrorMap::diagonal(bad), ArgumentError);
    const std::array<double, 2> w{1.0, 2.0};
    CHECK_THROWS_AS(MirrorMap::diagonal(w).value(vec({1, 2, 3})), ArgumentError);
}

TEST_CASE("diagonal quadratic values and gradients") {
    const Objective f = oracle::paper2d();
    CHECK(f.value(vec({1, 1})) == doctest::Approx(0.025));
    const Vector g = f.gradient(vec({1, 1}));
    CHECK(g[0] == doctest::Approx(0.04));
    CHECK(g[1] == doctest::Approx(0.01));
    CHECK(f.value(vec({0, 0})) == 0.0);
    CHECK(f.gradient(vec({0, 0})).isZero(0.0));

    const Objective r = oracle::restart2d();
    CHECK(r.value(vec({1, 1})) == doctest::Approx(0.99));
    CHECK(r.true_smoothness() == doctest::Approx(1.0));

    const std::array<double, 2> bad{0.1, -1.0};
    CHECK_THROWS_AS(make_diag_quadratic(bad), ArgumentError);
    CHECK_THROWS_AS(f.value(vec({1})), ArgumentError);
}

TEST_CASE("random SPD quadratic spectrum and determinism") {
    const Objective f = make_random_spd_quadratic(200, 0.001, 1.0, 7);
    REQUIRE(f.quadratic_matrix().has_value());
    const Matrix& M = *f.quadratic_matrix();
    Eigen::SelfAdjointEigenSolver<Matrix> es(M);
    CHECK(es.eigenvalues().minCoeff() >= 0.001 - 1e-12);
    CHECK(es.eigenvalues().maxCoeff() <= 1.0 + 1e-12);
    CHECK((M - M.transpose()).cwiseAbs().maxCoeff() == 0.0);

    const Objective again = make_random_spd_quadratic(200, 0.001, 1.0, 7);
    CHECK(again.quadratic_matrix()->cwiseEqual(M).all());
    const Objective other = make_random_spd_quadratic(200, 0.001, 1.0, 8);
    CHECK_FALSE(other.quadratic_matrix()->cwiseEqual(M).all());

    const Objective one = make_random_spd_quadratic(1, 0.0, 1.0, 11);
    const double lambda = (*one.quadratic_matrix())(0, 0);
    CHECK(lambda >= 0.0);
    CHECK(lambda <= 1.0);
    CHECK(one.value(vec({2})) == doctest::Approx(0.5 * lambda * 4.0));

    CHECK_THROWS_AS(make_random_spd_quadratic(0, 0.0, 1.0, 1), ArgumentError);
    CHECK_THROWS_AS(make_random_spd_quadratic(3, 2.0, 1.0, 1), ArgumentError);
}

TEST_CASE("finite-difference Hessian-vector product") {
    const Objective half = oracle::scalar_quadratic(1.0);
    CHECK(finite_diff_hess_vec(half, vec({3}), vec({2}), 1e-4)[0] == doctest::Approx(2.0).epsilon(1e-8));

    const Objective f = oracle::paper2d();
    const Vector hv = finite_diff_hess_vec(f, vec({0.7, -0.2}), vec({1, 1}), 1e-6);
    CHECK(hv[0] == doctest::Approx(0.04).epsilon(1e-8));
    CHECK(hv[1] == doctest::Approx(0.01).epsilon(1e-8));
    CHECK(finite_diff_hess_vec(f, vec({1, 1}), vec({0, 0}), 1e-6).isZero(0.0));
    CHECK_THROWS_AS(finite_diff_hess_vec(f, vec({1, 1}), vec({1, 1}), 0.0), ArgumentError);
}

TEST_CASE("objective without a Hessian oracle") {
    Objective f(1, [](const Vector& x) { return x.squaredNorm(); }, [](const Vector& x) -> Vector { return 2 * x; },
                std::nullopt, 2.0, 0.0);
    CHECK_FALSE(f.has_hessian_vec());
    CHECK_THROWS_AS(f.hessian_vec(vec({1}), vec({1})), CapabilityError);
    CHECK_THROWS_AS(Objective(1, {}, {}, std::nullopt, 1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(f.with_parameters(1.0, 2.0), ArgumentError);
}
