#include "accelflow/error.hpp"
#include "accelflow/integrate.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace accelflow;
using oracle::vec;

namespace {

double gf_error(double lambda, double t_end, int substeps) {
    const Objective f = oracle::scalar_quadratic(lambda);
    const FlowModel gf = FlowModel::catalog(ModelKind::Gf, f);
    const Trajectory t = integrate_from(gf, vec({1}), t_end, t_end, substeps);
    return std::abs(t.points.back()[0] - oracle::gradient_flow_solution(lambda, 1.0, t_end));
}

} // namespace

TEST_CASE("gradient flow matches the exponential") {
    CHECK(gf_error(1.0, 1.0, 100) <= 1e-8);

    const Objective f = oracle::scalar_quadratic(1.0);
    const Trajectory t = integrate_from(FlowModel::catalog(ModelKind::Gf, f), vec({1}), 5.0, 0.5);
    REQUIRE(t.size() == 11);
    for (std::size_t k = 0; k < t.size(); ++k) {
        CHECK(t.times[k] == doctest::Approx(0.5 * k));
        CHECK(std::abs(t.points[k][0] - std::exp(-t.times[k])) < 1e-9);
    }
}

TEST_CASE("observed order of the integrator") {
    const double lambda = 8.0;
    const std::vector<int> steps{50, 100, 200, 400};
    std::vector<double> err;
    for (int n : steps) {
        err.push_back(gf_error(lambda, 1.0, n));
    }
    for (std::size_t i = 1; i < err.size(); ++i) {
        CHECK(err[i - 1] / err[i] >= 12.0);
    }
    const double slope = std::log(err.front() / err.back()) / std::log(8.0);
    CHECK(slope >= 3.5);
}

TEST_CASE("constant objective leaves the state fixed") {
    Objective flat(2, [](const Vector&) { return 1.0; }, [](const Vector& x) -> Vector { return Vector::Zero(x.size()); },
                   std::nullopt, 1.0, 0.0, 1.0);
    const Vector x0 = vec({0.3, -4});
    for (ModelKind k : {ModelKind::Gf, ModelKind::Su, ModelKind::OdeC}) {
        const Trajectory t = integrate_from(FlowModel::catalog(k, flat), x0, 10.0, 1.0, 20);
        for (const Vector& x : t.points) {
            CHECK((x - x0).norm() == 0.0);
        }
    }
}

TEST_CASE("divergence is reported with the last valid time") {
    Objective concave(1, [](const Vector& x) { return -x.squaredNorm(); },
                      [](const Vector& x) -> Vector { return -2 * x; }, std::nullopt, 2.0, 0.0);
    const FlowModel gf = FlowModel::catalog(ModelKind::Gf, concave);
    try {
        integrate_from(gf, vec({1}), 40.0, 1.0, 10);
        FAIL("expected divergence");
    } catch (const DivergenceError& e) {
        CHECK(e.last_valid_time() == doctest::Approx(std::log(1e12) / 2.0).epsilon(0.01));
    }
}

TEST_CASE("integration is deterministic") {
    const Objective f = make_random_spd_quadratic(20, 0.001, 1.0, 3);
    const FlowModel m = FlowModel::catalog(ModelKind::OdeSC, f);
    const Vector x0 = Vector::Ones(20);
    const Trajectory a = integrate_from(m, x0, 30.0, 1.0, 20);
    const Trajectory b = integrate_from(m, x0, 30.0, 1.0, 20);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a.points[k].cwiseEqual(b.points[k]).all());
    }
    CHECK(a.aux.count("Z") == 1);
}

TEST_CASE("velocity models record V and Z") {
    const Objective f = oracle::paper2d(1.0, 0.001);
    const Trajectory t = integrate_from(FlowModel::catalog(ModelKind::Wilson, f), vec({1, 1}), 10.0, 1.0);
    REQUIRE(t.aux.at("V").size() == t.size());
    REQUIRE(t.aux.at("Z").size() == t.size());
    const Trajectory shi = integrate_from(FlowModel::catalog(ModelKind::ShiC, f), vec({1, 1}), 10.0, 1.0);
    CHECK(shi.aux.count("Z") == 0);
}

TEST_CASE("integrate argument checks") {
    const FlowModel gf = FlowModel::catalog(ModelKind::Gf, oracle::scalar_quadratic(1.0));
    CHECK_THROWS_AS(integrate(gf, IntegrationSpec{1.0, 1.0, 10, Vector()}), ArgumentError);
    CHECK_THROWS_AS(integrate(gf, IntegrationSpec{-1.0, 1.0, 10, vec({1})}), ArgumentError);
    CHECK_THROWS_AS(integrate(gf, IntegrationSpec{1.0, 1.0, 0, vec({1})}), ArgumentError);
}

TEST_CASE("deviation metrics") {
    Trajectory a;
    Trajectory b;
    const Vector d = vec({0.3, 0.4});
    for (int k = 0; k <= 10; ++k) {
        const Vector x = vec({double(k), -1.0 * k});
        a.push(k, x, 0.0);
        b.push(k, x + d, 0.0);
    }
    const DeviationMetrics same = deviation_metrics(a, a, 0, 10);
    for (double e : same.errors) {
        CHECK(e == 0.0);
    }
    const DeviationMetrics off = deviation_metrics(a, b, 3, 8);
    CHECK(off.window_mean == doctest::Approx(0.5));
    CHECK(off.window_max == doctest::Approx(0.5));
    CHECK(off.k_lo == 3);
    CHECK(off.k_hi == 8);

    CHECK(reduction_pct(1.0, 0.308) == doctest::Approx(69.2));

    Trajectory c;
    for (int k = 0; k <= 10; ++k) {
        c.push(k + 0.5, vec({0, 0}), 0.0);
    }
    CHECK_THROWS_AS(deviation_metrics(a, c, 0, 10), ArgumentError);
    CHECK_THROWS_AS(deviation_metrics(a, b, 0, 11), ArgumentError);
}
