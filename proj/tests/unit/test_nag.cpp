#include "accelflow/error.hpp"
#include "accelflow/nag.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace accelflow;
using oracle::vec;

namespace {

Vector identity_grad(const Vector& x) { return x; }

} // namespace

TEST_CASE("three-sequence step by hand") {
    const IterateState s0 = IterateState::start(vec({1}));
    const IterateState s1 = nag_step_three(s0, {0.75, 0.75, 0.5625, 0.0}, identity_grad);
    CHECK(s1.k == 1);
    CHECK(s1.x[0] == doctest::Approx(0.4375));
    CHECK(s1.z[0] == doctest::Approx(0.25));

    const IterateState opt = nag_step_three(IterateState::start(vec({0, 0})), {0.5, 0.5, 1.0, 0.0}, identity_grad);
    CHECK(opt.x.isZero(0.0));
    CHECK(opt.y.isZero(0.0));
    CHECK(opt.z.isZero(0.0));

    IterateState s{0, vec({2}), vec({2}), vec({-3})};
    const IterateState g = nag_step_three(s, {0.5, 0.0, 0.25, 0.0}, identity_grad);
    CHECK(g.y[0] == 2.0);
    CHECK(g.x[0] == doctest::Approx(1.5));

    CHECK_THROWS_AS(nag_step_three(s0, {1.0, 0.5, 1.0, 0.0}, identity_grad), ArgumentError);
    CHECK_THROWS_AS(nag_step_three(s0, {0.5, 1.5, 1.0, 0.0}, identity_grad), ArgumentError);
    CHECK_THROWS_AS(nag_step_three(s0, {0.5, 0.5, 0.0, 0.0}, identity_grad), ArgumentError);
}

TEST_CASE("two-sequence step by hand") {
    CHECK(nag_step_two(vec({1}), vec({1}), 0.5, 1.0, identity_grad)[0] == 0.0);
    CHECK(nag_step_two(vec({2}), vec({5}), 0.0, 0.25, identity_grad)[0] == doctest::Approx(1.5));
    CHECK(nag_step_two(vec({2}), vec({1}), 0.5, 0.5, identity_grad)[0] == doctest::Approx(1.25));
}

TEST_CASE("three- and two-sequence forms agree") {
    const Objective f = oracle::paper2d();
    const Vector x0 = vec({1, 1});
    const Schedule c = su_growth(1.0, 1.0, 1.0).schedule(200);
    const Schedule sc = wilson_growth(0.001, 1.0, 1.0).schedule(200);
    for (const Schedule* s : {&c, &sc}) {
        const Trajectory three = run_nag_schedule(f, x0, *s, 1.0);
        const Trajectory two = run_nag_two_sequence(f, x0, *s, 1.0);
        REQUIRE(three.size() == 201);
        for (std::size_t k = 0; k < three.size(); ++k) {
            CHECK((three.points[k] - two.points[k]).norm() < 1e-10);
        }
    }
}

TEST_CASE("variant names") {
    for (NagVariant v : {NagVariant::C, NagVariant::SC, NagVariant::ConstantC, NagVariant::ConstantSC}) {
        CHECK(variant_from_name(variant_name(v)) == v);
    }
    CHECK_FALSE(variant_from_name("NAG-X").has_value());
}

TEST_CASE("constant-step runs") {
    const Objective f = oracle::paper2d();
    const Vector x0 = vec({1, 1});
    NagSettings s;
    const Trajectory t = run_nag(f, x0, NagVariant::ConstantC, s);
    REQUIRE(t.size() == 301);
    for (const Vector& x : t.points) {
        CHECK(x.allFinite());
    }
    CHECK(t.f_values.back() < t.f_values.front());

    s.k_max = 1;
    const Trajectory one = run_nag(f, x0, NagVariant::ConstantC, s);
    REQUIRE(one.size() == 2);
    CHECK((one.points[1] - (x0 - f.gradient(x0) / f.L())).norm() < 1e-15);

    CHECK(constant_step_momentum_c(0) == 0.0);
    CHECK(constant_step_momentum_c(9) == doctest::Approx(0.75));
    CHECK_THROWS_AS(run_nag(f, x0, NagVariant::ConstantSC, s), ArgumentError);
}

TEST_CASE("verbose runs carry y and z") {
    const Objective f = oracle::paper2d();
    NagSettings s;
    s.k_max = 20;
    s.verbose = true;
    const Trajectory t = run_nag(f, vec({1, 1}), NagVariant::C, s);
    REQUIRE(t.aux.at("y").size() == t.size());
    REQUIRE(t.aux.at("z").size() == t.size());
    CHECK_NOTHROW(t.validate());
}

TEST_CASE("run_nag argument checks") {
    const Objective f = oracle::paper2d();
    NagSettings s;
    s.k_max = 0;
    CHECK_THROWS_AS(run_nag(f, vec({1, 1}), NagVariant::C, s), ArgumentError);
    s.k_max = 10;
    s.h = -1;
    CHECK_THROWS_AS(run_nag(f, vec({1, 1}), NagVariant::C, s), ArgumentError);
    s.h = 1;
    CHECK_THROWS_AS(run_nag(f, vec({1, 1, 1}), NagVariant::C, s), ArgumentError);
}
