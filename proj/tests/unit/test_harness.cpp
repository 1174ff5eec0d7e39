#include "accelflow/error.hpp"
#include "accelflow/experiments.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace accelflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("accelflow_harness_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("EXP1 writes trajectories, metrics and a manifest") {
    ExperimentSpec spec;
    spec.out_dir = scratch("exp1").string();
    const ExperimentResult r = run_experiment(spec);
    CHECK_FALSE(r.all_diverged());
    CHECK(fs::exists(fs::path(spec.out_dir) / "manifest.txt"));
    for (const ManifestEntry& e : r.manifest) {
        CHECK(e.experiment == "EXP1");
        CHECK(fs::exists(fs::path(spec.out_dir) / e.file));
    }
    const std::string manifest = slurp(fs::path(spec.out_dir) / "manifest.txt");
    CHECK(manifest == manifest_text(r.manifest));
    CHECK(manifest.find("=EXP1:") != std::string::npos);

    bool found = false;
    for (const MetricRow& m : r.metrics) {
        if (m.pair == "ODE-C/SU@NAG-C-C") {
            found = true;
            CHECK(m.reduction_pct >= 50.0);
            CHECK(m.window_lo == 100);
            CHECK(m.window_hi == 300);
        }
    }
    CHECK(found);

    const std::string metrics = slurp(fs::path(spec.out_dir) / "exp1_metrics.csv");
    CHECK(metrics.rfind("pair,window_lo,window_hi,mean_err_ref,mean_err_cand,reduction_pct\n", 0) == 0);
    const std::string ode = slurp(fs::path(spec.out_dir) / "exp1_ode-c.csv");
    CHECK(ode.rfind("k,t,x_0,x_1,f,energy\n", 0) == 0);
    fs::remove_all(spec.out_dir);
}

TEST_CASE("two runs are byte-identical") {
    ExperimentSpec a;
    a.experiment = "EXP4";
    a.out_dir = scratch("rep_a").string();
    ExperimentSpec b = a;
    b.out_dir = scratch("rep_b").string();
    run_experiment(a);
    run_experiment(b);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(a.out_dir)) {
        const fs::path other = fs::path(b.out_dir) / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(slurp(entry.path()) == slurp(other));
        ++files;
    }
    CHECK(files > 2);
    fs::remove_all(a.out_dir);
    fs::remove_all(b.out_dir);
}

TEST_CASE("every figure panel has one emitting experiment") {
    std::map<std::string, std::set<std::string>> owners;
    for (const char* id : {"EXP1", "EXP2", "EXP4", "EXP5"}) {
        ExperimentSpec s;
        s.experiment = id;
        s.out_dir = scratch(id).string();
        for (const ManifestEntry& e : run_experiment(s).manifest) {
            owners[e.panel].insert(e.experiment);
        }
        fs::remove_all(s.out_dir);
    }
    ExperimentSpec s3;
    s3.experiment = "EXP3";
    s3.h_values = {1.0};
    s3.out_dir = scratch("exp3").string();
    for (const ManifestEntry& e : run_experiment(s3).manifest) {
        owners[e.panel].insert(e.experiment);
    }
    fs::remove_all(s3.out_dir);

    for (const auto& [panel, ids] : owners) {
        if (panel != "summary") {
            CHECK_MESSAGE(ids.size() == 1, panel);
        }
    }
    for (const char* p : {"fig2a", "fig2d", "fig3a", "fig4a", "fig5d", "fig6a", "fig7a", "fig10a", "counter",
                          "fig11a", "fig11b"}) {
        CHECK_MESSAGE(owners.count(p) == 1, p);
    }
}

TEST_CASE("run_experiment rejects bad specs") {
    ExperimentSpec s;
    s.models = std::vector<std::string>{};
    CHECK_THROWS_AS(run_experiment(s), ArgumentError);
    s.models = std::vector<std::string>{"NOPE"};
    CHECK_THROWS_AS(run_experiment(s), ConfigSchemaError);

    ExperimentSpec io;
    io.experiment = "nag";
    io.out_dir = "/proc/accelflow-cannot-write";
    CHECK_THROWS_AS(run_experiment(io), IoError);
}

TEST_CASE("divergence is recorded per model") {
    ExperimentSpec s;
    s.experiment = "nag";
    s.L = 0.001;
    s.models = std::vector<std::string>{"NAG-C-C"};
    s.out_dir = scratch("div").string();
    const ExperimentResult r = run_experiment(s);
    CHECK(r.all_diverged());
    fs::remove_all(s.out_dir);
}

TEST_CASE("h sweep shrinks with h") {
    ExperimentSpec s;
    const Objective f = make_problem(s);
    const std::vector<SweepRow> rows = h_sweep(f, initial_point(s), false, {1.0, 0.1}, 300.0, 100.0, 10.0, 1.0, 100);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].max_early_ode < rows[0].max_early_ode);
    CHECK(rows[0].ode.window_mean < rows[0].blf.window_mean);
}
