#include "accelflow/accelflow.h"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kConfig = 2, kDiverged = 3, kIo = 4 };

struct Flags {
    std::string config;
    std::optional<std::string> out;
    std::optional<long long> seed;
    std::optional<double> h;
    std::optional<int> steps;
    std::optional<double> mu;
    std::optional<double> bigL;
    std::optional<double> eps;
    std::optional<int> kmin;
    std::vector<std::string> models;
    std::optional<std::string> problem;
};

int exit_code(af_status st) {
    switch (st) {
    case AF_OK: return kOk;
    case AF_ERR_ARGUMENT:
    case AF_ERR_CONFIG_PARSE:
    case AF_ERR_CONFIG_SCHEMA:
    case AF_ERR_FILE_NOT_FOUND: return kConfig;
    case AF_ERR_DIVERGENCE: return kDiverged;
    case AF_ERR_IO: return kIo;
    default: return kFailure;
    }
}

int report(af_status st) {
    if (st == AF_ERR_CONFIG_PARSE && af_last_error_line() > 0) {
        std::fprintf(stderr, "accelflow: %s (line %d): %s\n", af_status_name(st), af_last_error_line(),
                     af_last_error());
    } else {
        std::fprintf(stderr, "accelflow: %s: %s\n", af_status_name(st), af_last_error());
    }
    return exit_code(st);
}

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON experiment config");
    cmd->add_option("--out", f.out, "output directory");
    cmd->add_option("--seed", f.seed, "random seed")->check(CLI::NonNegativeNumber);
    cmd->add_option("--h", f.h, "step size h");
    cmd->add_option("--steps", f.steps, "number of steps k_max");
    cmd->add_option("--mu", f.mu, "strong convexity parameter");
    cmd->add_option("--bigL", f.bigL, "smoothness parameter L");
    cmd->add_option("--eps", f.eps, "growth offset epsilon");
    cmd->add_option("--kmin", f.kmin, "minimum steps between restarts");
    cmd->add_option("--model", f.models, "model or method name (repeatable)");
    cmd->add_option("--problem", f.problem, "test problem")
        ->check(CLI::IsMember({"paper2d", "restart2d", "randquad"}));
}

// Subcommand to experiment id; compare picks the strongly convex study when mu > 0.
std::string experiment_for(const std::string& sub, af_experiment* exp) {
    if (sub == "simulate" || sub == "nag" || sub == "suite") {
        return sub;
    }
    if (sub == "sweep-h") {
        return "EXP3";
    }
    if (sub == "restart") {
        return "EXP4";
    }
    if (sub == "reparam") {
        return "EXP5";
    }
    const char* current = af_experiment_get_string(exp, "experiment");
    if (current && std::string(current) == "EXP2") {
        return "EXP2";
    }
    double mu = 0.0;
    af_experiment_get_double(exp, "mu", &mu);
    return mu > 0.0 ? "EXP2" : "EXP1";
}

af_status apply(af_experiment* exp, const Flags& f) {
    af_status st = AF_OK;
    auto step = [&](af_status s) {
        if (st == AF_OK) {
            st = s;
        }
    };
    if (f.out) step(af_experiment_set_string(exp, "out", f.out->c_str()));
    if (f.problem) step(af_experiment_set_string(exp, "problem", f.problem->c_str()));
    if (f.seed) step(af_experiment_set_int(exp, "seed", *f.seed));
    if (f.h) step(af_experiment_set_double(exp, "h", *f.h));
    if (f.steps) step(af_experiment_set_int(exp, "k_max", *f.steps));
    if (f.mu) step(af_experiment_set_double(exp, "mu", *f.mu));
    if (f.bigL) step(af_experiment_set_double(exp, "L", *f.bigL));
    if (f.eps) step(af_experiment_set_double(exp, "eps", *f.eps));
    if (f.kmin) step(af_experiment_set_int(exp, "k_min", *f.kmin));
    for (const std::string& m : f.models) {
        step(af_experiment_add_model(exp, m.c_str()));
    }
    return st;
}

int run(const std::string& sub, const Flags& f) {
    af_experiment* exp = nullptr;
    af_status st = f.config.empty() ? af_experiment_create("EXP1", &exp) : af_experiment_load(f.config.c_str(), &exp);
    if (st != AF_OK) {
        return report(st);
    }
    st = apply(exp, f);
    if (st == AF_OK) {
        st = af_experiment_set_string(exp, "experiment", experiment_for(sub, exp).c_str());
    }
    if (st == AF_OK) {
        st = af_experiment_validate(exp);
    }
    int diverged = 0;
    if (st == AF_OK) {
        st = af_experiment_run(exp, &diverged);
    }
    if (st != AF_OK) {
        af_experiment_destroy(exp);
        return report(st);
    }
    for (size_t i = 0; i < af_experiment_summary_size(exp); ++i) {
        std::printf("%s\n", af_experiment_summary_line(exp, i));
    }
    std::printf("manifest: %s/manifest.txt (%zu entries)\n", af_experiment_get_string(exp, "out"),
                af_experiment_manifest_size(exp));
    af_experiment_destroy(exp);
    if (diverged) {
        std::fprintf(stderr, "accelflow: every requested model diverged\n");
        return kDiverged;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Accelerated gradient methods and their continuous-time models"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(af_version()));

    Flags flags;
    const std::vector<std::pair<const char*, const char*>> subs{
        {"simulate", "integrate flow models and write their trajectories"},
        {"nag", "run discrete Nesterov methods"},
        {"compare", "model fidelity against NAG iterates"},
        {"sweep-h", "deviation versus step size h, ODE against BLF"},
        {"restart", "monotone restart against speed restart"},
        {"reparam", "time reparametrization of the a=1 flows"},
        {"suite", "every experiment"},
    };
    for (const auto& [name, help] : subs) {
        add_common(app.add_subcommand(name, help), flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }
    return run(app.get_subcommands().front()->get_name(), flags);
}
