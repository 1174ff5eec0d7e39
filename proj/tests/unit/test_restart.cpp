#include "accelflow/error.hpp"
#include "accelflow/restart.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace accelflow;
using oracle::vec;

TEST_CASE("restart condition ours") {
    CHECK(restart_condition_ours(vec({1.5, 0}), vec({1, 0}), vec({0, 0})));
    CHECK_FALSE(restart_condition_ours(vec({3, 1}), vec({1, 1}), vec({1, 1})));
    CHECK_FALSE(restart_condition_ours(vec({2.5}), vec({1}), vec({0})));
    CHECK_THROWS_AS(restart_condition_ours(vec({1}), vec({1, 0}), vec({0, 0})), ArgumentError);
}

TEST_CASE("restart condition su") {
    CHECK_FALSE(restart_condition_su(vec({2.5}), vec({1}), vec({0})));
    CHECK_FALSE(restart_condition_su(vec({2}), vec({1}), vec({0})));
    CHECK(restart_condition_su(vec({1.5}), vec({1}), vec({0})));
}

TEST_CASE("scheme names") {
    for (RestartScheme s : {RestartScheme::Ours, RestartScheme::Su, RestartScheme::None}) {
        CHECK(scheme_from_name(scheme_name(s)) == s);
    }
    CHECK_FALSE(scheme_from_name("speed").has_value());
}

TEST_CASE("ours on the two-dimensional problem is strictly monotone") {
    const Objective f = oracle::restart2d();
    const RestartRun run = run_restart(f, vec({1, 1}), constant_step_restart(RestartScheme::Ours, 1.0, 1, 200));
    REQUIRE(run.trajectory.size() == 201);
    for (std::size_t k = 0; k + 1 < run.trajectory.size(); ++k) {
        const double fk = run.trajectory.f_values[k];
        CHECK((run.trajectory.f_values[k + 1] < fk || fk == 0.0));
    }
    CHECK(verify_monotone(run).ok);
    CHECK_FALSE(run.events.empty());
    CHECK(run.trajectory.channels.at("restart").size() == run.trajectory.size());
}

TEST_CASE("su restart is not monotone") {
    const Objective f = oracle::restart2d();
    const RestartRun run = run_restart(f, vec({1, 1}), constant_step_restart(RestartScheme::Su, 1.0, 1, 200));
    const double ratio = run.trajectory.f_values[9] / run.trajectory.f_values[8];
    CHECK(ratio >= 2.3);
    CHECK(ratio <= 3.3);
    const MonotoneReport rep = verify_monotone(run);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.first_violation.has_value());
    CHECK(*rep.first_violation == 9);
}

TEST_CASE("no restart at the optimum") {
    const std::array<double, 1> c{0.5};
    const Objective f = make_diag_quadratic(c);
    const RestartRun run = run_restart(f, vec({0}), constant_step_restart(RestartScheme::None, 1.0, 1, 30));
    CHECK(run.events.empty());
    for (const Vector& x : run.trajectory.points) {
        CHECK(x[0] == 0.0);
    }
    CHECK(verify_monotone(run).ok);
}

TEST_CASE("restart settings are validated") {
    const Objective f = oracle::restart2d();
    CHECK_THROWS_AS(run_restart(f, vec({1, 1}), constant_step_restart(RestartScheme::Ours, 0.5, 1, 10)),
                    ArgumentError);
    RestartSettings s = constant_step_restart(RestartScheme::Ours, 1.0, 1, 10);
    s.momentum = [](int) { return 1.5; };
    CHECK_THROWS_AS(run_restart(f, vec({1, 1}), s), ArgumentError);
    s = constant_step_restart(RestartScheme::Ours, 1.0, 0, 10);
    CHECK_THROWS_AS(run_restart(f, vec({1, 1}), s), ArgumentError);
}

TEST_CASE("fallback gradient step never increases f") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Objective f = make_random_spd_quadratic(10, 0.0, 1.0, seed);
        std::mt19937_64 rng(seed);
        const Vector x0 = oracle::random_vector(rng, 10);
        const RestartRun run =
            run_restart(f, x0, constant_step_restart(RestartScheme::Ours, f.true_smoothness(), 1, 300));
        CHECK(verify_monotone(run).ok);
    }
}

TEST_CASE("unified second-order form") {
    std::vector<double> grid;
    for (int i = 1; i <= 300; ++i) {
        grid.push_back(i);
    }
    const UnifiedForm c = unified_form(su_growth(1.0, 1.0, 1.0).scaling, 0.0);
    CHECK_FALSE(unified_form_violation(c, grid).has_value());
    const UnifiedForm sc = unified_form(wilson_growth(0.001, 1.0, 1.0).scaling, 0.001);
    CHECK_FALSE(unified_form_violation(sc, grid).has_value());
    const double r = std::sqrt(0.001);
    const double a = wilson_growth(0.001, 1.0, 1.0).scaling.a(0.0);
    CHECK(sc.c1(5.0) == doctest::Approx(r + r * (1 - a)));
    CHECK(sc.c2(5.0) == doctest::Approx(1.0));
    CHECK(sc.b(5.0) == doctest::Approx(a / r));

    const UnifiedForm blf = unified_form(su_growth(1.0, 1.0, 1.0).scaling.with_constant_a(0.0), 0.0);
    CHECK(unified_form_violation(blf, grid) == 1.0);
}
