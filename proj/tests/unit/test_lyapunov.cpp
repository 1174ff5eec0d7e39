#include "accelflow/error.hpp"
#include "accelflow/integrate.hpp"
#include "accelflow/lyapunov.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace accelflow;
using oracle::vec;

TEST_CASE("energy values") {
    const Objective f = oracle::paper2d();
    const MirrorMap g = MirrorMap::euclidean();
    const ScalarFn zero = [](double) { return 0.0; };
    CHECK(energy_general(vec({0, 0}), vec({0, 0}), 0.0, f, g, zero, 0.0) == 0.0);

    const ScalarFn su_beta = su_growth(1.0, 1.0, 1.0).scaling.beta;
    CHECK(energy_general(vec({1, 1}), vec({1, 1}), 0.0, f, g, su_beta, 0.0) == doctest::Approx(1.00625));
    CHECK(energy_general(vec({1, 1}), vec({1, 1}), 0.0, f, g, zero, 0.001) == doctest::Approx(0.026));

    CHECK(energy_single(vec({0, 0}), 3.0, f, g, su_beta, 0.0) == 0.0);
    CHECK(energy_single(vec({1, 1}), 0.0, f, g, zero, 0.0) == doctest::Approx(1.025));
}

TEST_CASE("certified G-ODE-C run") {
    const Objective f = oracle::paper2d();
    const FlowModel m = FlowModel::catalog(ModelKind::GOdeC, f);
    const Trajectory t = integrate_from(m, vec({1, 1}), 300.0, 1.0, 100);
    const EnergyTrace tr = certify(t, f, m.mirror(), *m.scaling(), 0.0, EnergyForm::General, 1e-6);
    CHECK(tr.ok());
    CHECK(tr.energy.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(tr.objective_gap[i] <= tr.bound[i] * (1 + 1e-6));
    }

    Trajectory rev = t;
    std::reverse(rev.points.begin(), rev.points.end());
    std::reverse(rev.f_values.begin(), rev.f_values.end());
    std::reverse(rev.aux["Z"].begin(), rev.aux["Z"].end());
    const EnergyTrace bad = certify(rev, f, m.mirror(), *m.scaling(), 0.0, EnergyForm::General, 1e-6);
    CHECK_FALSE(bad.monotonicity.empty());
}

TEST_CASE("constant run at the optimum") {
    const Objective f = oracle::paper2d();
    const FlowModel m = FlowModel::catalog(ModelKind::GOdeC, f);
    const Trajectory t = integrate_from(m, vec({0, 0}), 50.0, 1.0, 10);
    const EnergyTrace tr = certify(t, f, m.mirror(), *m.scaling(), 0.0, EnergyForm::General, 1e-6);
    CHECK(tr.ok());
    for (double e : tr.energy) {
        CHECK(e == 0.0);
    }
}

TEST_CASE("certify needs a Z series") {
    const Objective f = oracle::paper2d();
    Trajectory t;
    t.push(0.0, vec({1, 1}), f.value(vec({1, 1})));
    CHECK_THROWS_AS(certify(t, f, MirrorMap::euclidean(), su_growth(1, 1, 1).scaling, 0.0, EnergyForm::General, 1e-6),
                    ArgumentError);
}
