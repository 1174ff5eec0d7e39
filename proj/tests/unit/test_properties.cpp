#include "accelflow/integrate.hpp"
#include "accelflow/lyapunov.hpp"
#include "accelflow/nag.hpp"
#include "accelflow/restart.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace accelflow;

TEST_CASE("schedules from random growth sequences") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> inc(0.01, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> A{inc(rng)};
        for (int k = 0; k < 60; ++k) {
            A.push_back(A.back() + inc(rng));
        }
        for (double mu : {0.0, 0.01}) {
            const Schedule s = Schedule::from_A(A, mu);
            for (int k = 0; k < s.horizon(); ++k) {
                const StepCoefficients& c = s.at(k);
                CHECK(c.theta > 0.0);
                CHECK(c.theta < 1.0);
                CHECK(c.a >= 0.0);
                CHECK(c.a <= 1.0);
                CHECK(c.s > 0.0);
                if (k > 0) {
                    CHECK(c.b == doctest::Approx(c.a * (1.0 - s.at(k - 1).theta) / s.at(k - 1).theta));
                }
            }
        }
    }
}

TEST_CASE("three- and two-sequence forms agree on random quadratics") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Objective f = make_random_spd_quadratic(8, 0.01, 1.0, seed);
        std::mt19937_64 rng(seed);
        const Vector x0 = oracle::random_vector(rng, 8);
        for (const Schedule& s : {su_growth(1.0, 1.0, 0.7).schedule(200), wilson_growth(0.01, 1.0, 0.7).schedule(200)}) {
            const Trajectory a = run_nag_schedule(f, x0, s, 0.7);
            const Trajectory b = run_nag_two_sequence(f, x0, s, 0.7);
            for (std::size_t k = 0; k < a.size(); ++k) {
                CHECK((a.points[k] - b.points[k]).norm() < 1e-10);
            }
        }
    }
}

TEST_CASE("no trigger means strict descent") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Objective f = make_random_spd_quadratic(6, 0.0, 1.0, 100 + seed);
        std::mt19937_64 rng(seed);
        const Vector x0 = oracle::random_vector(rng, 6);
        const RestartRun plain =
            run_restart(f, x0, constant_step_restart(RestartScheme::None, f.true_smoothness(), 1, 300));
        const auto& x = plain.trajectory.points;
        const auto& fv = plain.trajectory.f_values;
        std::size_t k = 0;
        while (k + 1 < x.size()) {
            const Vector& prev = k == 0 ? x[0] : x[k - 1];
            if (restart_condition_ours(x[k + 1], x[k], prev)) {
                break;
            }
            CHECK(fv[k + 1] < fv[k]);
            ++k;
        }
        CHECK(k > 0);
    }
}

TEST_CASE("energy decays for random starts") {
    const Objective fc = make_random_spd_quadratic(10, 0.0, 1.0, 5);
    const Objective fs = make_random_spd_quadratic(10, 0.01, 1.0, 5);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 5; ++trial) {
        const Vector x0 = oracle::random_vector(rng, 10);
        for (const char* name : {"su", "muehlebach-c"}) {
            FlowOptions o;
            o.scaling = name;
            const FlowModel m = FlowModel::catalog(ModelKind::GOdeC, fc, o);
            const Trajectory t = integrate_from(m, x0, 100.0, 1.0, 50);
            CHECK(certify(t, fc, m.mirror(), *m.scaling(), 0.0, EnergyForm::General, 1e-6).ok());
        }
        for (const char* name : {"wilson", "muehlebach-sc", "chen"}) {
            FlowOptions o;
            o.scaling = name;
            const FlowModel m = FlowModel::catalog(ModelKind::GOdeUC, fs, o);
            const Trajectory t = integrate_from(m, x0, 100.0, 1.0, 50);
            CHECK(certify(t, fs, m.mirror(), *m.scaling(), fs.mu(), EnergyForm::General, 1e-6).ok());
        }
    }
}

TEST_CASE("a = 1 flows decrease f at Z") {
    const Objective f = make_random_spd_quadratic(10, 0.01, 1.0, 9);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 5; ++trial) {
        const Vector x0 = oracle::random_vector(rng, 10);
        for (ModelKind k : {ModelKind::GOdeC, ModelKind::GOdeUC}) {
            FlowOptions o;
            o.a = 1.0;
            const FlowModel m = FlowModel::catalog(k, f, o);
            const Trajectory t = integrate_from(m, x0, 100.0, 1.0, 50).with_primary("Z", f);
            for (std::size_t i = 1; i < t.size(); ++i) {
                CHECK(t.f_values[i] <= t.f_values[i - 1] + 1e-6 * (1.0 + std::abs(t.f_values[i - 1])));
            }
        }
    }
}

TEST_CASE("representation round trips on random states") {
    const Objective f = oracle::paper2d(1.0, 0.001);
    std::mt19937_64 rng(12);
    for (ModelKind k : {ModelKind::OdeC, ModelKind::OdeSC, ModelKind::GOdeUC, ModelKind::MuehlebachSC}) {
        const FlowModel m = FlowModel::catalog(k, f);
        for (int i = 0; i < 100; ++i) {
            const FlowState s{0.5 + i, oracle::random_vector(rng, 2), oracle::random_vector(rng, 2)};
            const Representation other = m.representation() == Representation::PositionDual
                                             ? Representation::PositionVelocity
                                             : Representation::PositionDual;
            const FlowState rt = m.convert(m.convert(s, m.representation(), other), other, m.representation());
            CHECK((*rt.secondary - *s.secondary).norm() <= 1e-13 * (1.0 + s.secondary->norm()));
        }
    }
}
