#include "accelflow/config.hpp"
#include "accelflow/csv.hpp"
#include "accelflow/error.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace accelflow;

TEST_CASE("defaults") {
    const ExperimentSpec s = parse_config("{}");
    CHECK(s.h == 1.0);
    CHECK(s.k_max == 300);
    CHECK(s.eps == 1.0);
    CHECK(s.experiment == "EXP1");
    CHECK_FALSE(s.models.has_value());
    CHECK_NOTHROW(validate_spec(s));
}

TEST_CASE("full config") {
    const ExperimentSpec s = parse_config(R"({
        "experiment": "EXP2", "problem": "randquad", "n": 30, "seed": 11,
        "models": ["ODE-SC", "WILSON"], "h": 0.5, "k_max": 40, "mu": 0.01, "L": 2,
        "eps": 0.5, "k_min": 5, "substeps": 20, "s": 0.25, "h_values": [1, 0.5], "out": "somewhere"
    })");
    CHECK(s.experiment == "EXP2");
    CHECK(s.problem == ProblemKind::RandQuad);
    CHECK(s.n == 30);
    CHECK(s.seed == 11);
    CHECK(s.models->size() == 2);
    CHECK(s.h == 0.5);
    CHECK(s.k_max == 40);
    CHECK(*s.mu == 0.01);
    CHECK(s.L == 2.0);
    CHECK(s.k_min == 5);
    CHECK(s.h_values.size() == 2);
    CHECK(s.out_dir == "somewhere");
    CHECK_NOTHROW(validate_spec(s));
}

TEST_CASE("errors are distinct") {
    try {
        parse_config("{\n  \"h\": 1,\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const ConfigParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_config(R"({"unknown": 1})"), ConfigSchemaError);
    CHECK_THROWS_AS(parse_config(R"({"h": "one"})"), ConfigSchemaError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigSchemaError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), FileNotFoundError);
}

TEST_CASE("schema rules") {
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"models": ["WILSON"]})")), ConfigSchemaError);
    CHECK_NOTHROW(validate_spec(parse_config(R"({"models": ["WILSON"], "mu": 0.001})")));
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"models": ["NAG-SC"]})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"models": ["FOO"]})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"models": []})")), ArgumentError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"h": 0})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"k_max": 0})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"experiment": "EXP9"})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"mu": 2})")), ConfigSchemaError);
    CHECK_THROWS_AS(validate_spec(parse_config(R"({"x0": [1, 2, 3]})")), ConfigSchemaError);
    CHECK_THROWS_AS(parse_config(R"({"problem": "cube"})"), ConfigSchemaError);
}

TEST_CASE("experiment default mu") {
    CHECK(parse_config(R"({"experiment": "EXP2"})").mu_or_default() == 0.001);
    CHECK(parse_config(R"({"experiment": "EXP1"})").mu_or_default() == 0.0);
    CHECK(parse_config(R"({"experiment": "EXP1", "mu": 0.01})").mu_or_default() == 0.01);
}

TEST_CASE("problems and initial points") {
    ExperimentSpec s;
    CHECK(make_problem(s).value(initial_point(s)) == doctest::Approx(0.025));
    s.problem = ProblemKind::Restart2d;
    CHECK(make_problem(s).value(initial_point(s)) == doctest::Approx(0.99));
    s.problem = ProblemKind::RandQuad;
    s.n = 50;
    const Vector a = initial_point(s);
    CHECK(a.size() == 50);
    CHECK(a.cwiseEqual(initial_point(s)).all());
    CHECK(problem_from_name("paper2d") == ProblemKind::Paper2d);
    CHECK_FALSE(problem_from_name("x").has_value());
}

TEST_CASE("load from file") {
    const auto path = std::filesystem::temp_directory_path() / "accelflow_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"experiment": "EXP3", "k_max": 12})";
    }
    const ExperimentSpec s = load_config(path.string());
    CHECK(s.experiment == "EXP3");
    CHECK(s.k_max == 12);
    std::filesystem::remove(path);
}

TEST_CASE("csv formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-30) == "-2.4999999999999999e-30");

    Trajectory t;
    t.push(0.0, Vector::Ones(2), 0.5);
    t.push(1.0, Vector::Zero(2), 0.0);
    t.channels["energy"] = {1.0, 0.25};
    t.channels["restart"] = {0.0, 1.0};
    const std::string csv = trajectory_csv(t);
    CHECK(csv == "k,t,x_0,x_1,f,energy,restart\n0,0,1,1,0.5,1,0\n1,1,0,0,0,0.25,1\n");
    CHECK(csv.find('\r') == std::string::npos);

    const std::string m = metrics_csv({{"A/B", 100, 300, 1.0, 0.25, 75.0}});
    CHECK(m == "pair,window_lo,window_hi,mean_err_ref,mean_err_cand,reduction_pct\nA/B,100,300,1,0.25,75\n");

    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.csv", "x"), IoError);
}
