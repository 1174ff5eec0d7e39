#include "accelflow/accelflow.h"

#include "accelflow/config.hpp"
#include "accelflow/csv.hpp"
#include "accelflow/error.hpp"
#include "accelflow/experiments.hpp"
#include "accelflow/flows.hpp"
#include "accelflow/integrate.hpp"
#include "accelflow/nag.hpp"
#include "accelflow/restart.hpp"

#include <new>
#include <string>

using namespace accelflow;

struct af_problem {
    Objective f;
};

struct af_trajectory {
    Trajectory traj;
};

struct af_experiment {
    ExperimentSpec spec;
    std::vector<std::string> manifest;
    std::vector<std::string> summary;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;

af_status status_of(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Argument: return AF_ERR_ARGUMENT;
    case ErrorKind::Schedule: return AF_ERR_SCHEDULE;
    case ErrorKind::Capability: return AF_ERR_CAPABILITY;
    case ErrorKind::Domain: return AF_ERR_DOMAIN;
    case ErrorKind::Divergence: return AF_ERR_DIVERGENCE;
    case ErrorKind::ConfigParse: return AF_ERR_CONFIG_PARSE;
    case ErrorKind::ConfigSchema: return AF_ERR_CONFIG_SCHEMA;
    case ErrorKind::FileNotFound: return AF_ERR_FILE_NOT_FOUND;
    case ErrorKind::Io: return AF_ERR_IO;
    }
    return AF_ERR_INTERNAL;
}

template <typename Fn>
af_status guarded(Fn&& fn) {
    g_error.clear();
    g_error_line = 0;
    try {
        fn();
        return AF_OK;
    } catch (const ConfigParseError& e) {
        g_error = e.what();
        g_error_line = e.line();
        return AF_ERR_CONFIG_PARSE;
    } catch (const Error& e) {
        g_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return AF_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_error = e.what();
        return AF_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown failure";
        return AF_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw ArgumentError(std::string(what) + " is null");
    }
}

Vector copy_in(const double* x, int n) { return Eigen::Map<const Vector>(x, n); }

} // namespace

extern "C" {

const char* af_version(void) { return "1.0.0"; }

const char* af_status_name(af_status status) {
    switch (status) {
    case AF_OK: return "ok";
    case AF_ERR_ARGUMENT: return "argument error";
    case AF_ERR_SCHEDULE: return "schedule error";
    case AF_ERR_CAPABILITY: return "capability error";
    case AF_ERR_DOMAIN: return "domain error";
    case AF_ERR_DIVERGENCE: return "divergence";
    case AF_ERR_CONFIG_PARSE: return "config parse error";
    case AF_ERR_CONFIG_SCHEMA: return "config schema violation";
    case AF_ERR_FILE_NOT_FOUND: return "file not found";
    case AF_ERR_IO: return "i/o error";
    case AF_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* af_last_error(void) { return g_error.c_str(); }
int af_last_error_line(void) { return g_error_line; }

af_status af_problem_create(const char* kind, int n, double mu, double L, uint64_t seed, af_problem** out) {
    return guarded([&] {
        require(kind, "kind");
        require(out, "out");
        *out = nullptr;
        const auto pk = problem_from_name(kind);
        if (!pk) {
            throw ArgumentError(std::string("unknown problem '") + kind + "'");
        }
        ExperimentSpec spec;
        spec.problem = *pk;
        spec.n = n;
        spec.mu = mu;
        spec.L = L;
        spec.seed = seed;
        *out = new af_problem{make_problem(spec)};
    });
}

void af_problem_destroy(af_problem* problem) { delete problem; }

int af_problem_dim(const af_problem* problem) { return problem ? problem->f.dim() : 0; }

af_status af_problem_value(const af_problem* problem, const double* x, double* out) {
    return guarded([&] {
        require(problem, "problem");
        require(x, "x");
        require(out, "out");
        *out = problem->f.value(copy_in(x, problem->f.dim()));
    });
}

af_status af_problem_gradient(const af_problem* problem, const double* x, double* out) {
    return guarded([&] {
        require(problem, "problem");
        require(x, "x");
        require(out, "out");
        const Vector g = problem->f.gradient(copy_in(x, problem->f.dim()));
        Eigen::Map<Vector>(out, g.size()) = g;
    });
}

af_status af_simulate(const af_problem* problem, const char* model, const double* x0, double h, int steps, double eps,
                      int substeps, af_trajectory** out) {
    return guarded([&] {
        require(problem, "problem");
        require(model, "model");
        require(x0, "x0");
        require(out, "out");
        *out = nullptr;
        const auto kind = model_from_name(model);
        if (!kind) {
            throw ArgumentError(std::string("unknown model '") + model + "'");
        }
        if (steps < 1) {
            throw ArgumentError("steps must be positive");
        }
        ExperimentSpec spec;
        spec.h = h;
        spec.k_max = steps;
        spec.eps = eps;
        spec.substeps = substeps;
        *out = new af_trajectory{
            simulate_model(problem->f, *kind, copy_in(x0, problem->f.dim()), spec, problem->f.mu())};
    });
}

af_status af_run_nag(const af_problem* problem, const char* variant, const double* x0, double h, int steps, double eps,
                     af_trajectory** out) {
    return guarded([&] {
        require(problem, "problem");
        require(variant, "variant");
        require(x0, "x0");
        require(out, "out");
        *out = nullptr;
        const auto v = variant_from_name(variant);
        if (!v) {
            throw ArgumentError(std::string("unknown Nesterov variant '") + variant + "'");
        }
        NagSettings s;
        s.h = h;
        s.k_max = steps;
        s.eps = eps;
        *out = new af_trajectory{run_nag(problem->f, copy_in(x0, problem->f.dim()), *v, s)};
    });
}

af_status af_run_restart(const af_problem* problem, const char* scheme, const double* x0, int k_min, int steps,
                         af_trajectory** out) {
    return guarded([&] {
        require(problem, "problem");
        require(scheme, "scheme");
        require(x0, "x0");
        require(out, "out");
        *out = nullptr;
        const auto sc = scheme_from_name(scheme);
        if (!sc) {
            throw ArgumentError(std::string("unknown restart scheme '") + scheme + "'");
        }
        RestartRun run = run_restart(problem->f, copy_in(x0, problem->f.dim()),
                                     constant_step_restart(*sc, problem->f.L(), k_min, steps));
        *out = new af_trajectory{std::move(run.trajectory)};
    });
}

void af_trajectory_destroy(af_trajectory* traj) { delete traj; }

size_t af_trajectory_size(const af_trajectory* traj) { return traj ? traj->traj.size() : 0; }

int af_trajectory_dim(const af_trajectory* traj) { return traj ? traj->traj.dim() : 0; }

af_status af_trajectory_sample(const af_trajectory* traj, size_t index, double* t, double* x, double* f) {
    return guarded([&] {
        require(traj, "trajectory");
        if (index >= traj->traj.size()) {
            throw ArgumentError("sample index out of range");
        }
        if (t) {
            *t = traj->traj.times[index];
        }
        if (x) {
            const Vector& p = traj->traj.points[index];
            Eigen::Map<Vector>(x, p.size()) = p;
        }
        if (f) {
            *f = traj->traj.f_values[index];
        }
    });
}

af_status af_trajectory_write_csv(const af_trajectory* traj, const char* path) {
    return guarded([&] {
        require(traj, "trajectory");
        require(path, "path");
        write_text_file(path, trajectory_csv(traj->traj));
    });
}

af_status af_experiment_create(const char* id, af_experiment** out) {
    return guarded([&] {
        require(id, "id");
        require(out, "out");
        *out = nullptr;
        auto exp = std::make_unique<af_experiment>();
        exp->spec.experiment = id;
        validate_spec(exp->spec);
        *out = exp.release();
    });
}

af_status af_experiment_load(const char* config_path, af_experiment** out) {
    return guarded([&] {
        require(config_path, "config_path");
        require(out, "out");
        *out = nullptr;
        auto exp = std::make_unique<af_experiment>();
        exp->spec = load_config(config_path);
        *out = exp.release();
    });
}

void af_experiment_destroy(af_experiment* exp) { delete exp; }

af_status af_experiment_set_double(af_experiment* exp, const char* key, double value) {
    return guarded([&] {
        require(exp, "experiment");
        require(key, "key");
        const std::string k = key;
        if (k == "h") {
            exp->spec.h = value;
        } else if (k == "mu") {
            exp->spec.mu = value;
        } else if (k == "L") {
            exp->spec.L = value;
        } else if (k == "eps") {
            exp->spec.eps = value;
        } else if (k == "s") {
            exp->spec.s = value;
        } else {
            throw ArgumentError("unknown numeric key '" + k + "'");
        }
    });
}

af_status af_experiment_set_int(af_experiment* exp, const char* key, int64_t value) {
    return guarded([&] {
        require(exp, "experiment");
        require(key, "key");
        const std::string k = key;
        if (k == "seed") {
            if (value < 0) {
                throw ArgumentError("seed must be non-negative");
            }
            exp->spec.seed = static_cast<std::uint64_t>(value);
            return;
        }
        if (value < INT32_MIN || value > INT32_MAX) {
            throw ArgumentError("value for '" + k + "' out of range");
        }
        const int v = static_cast<int>(value);
        if (k == "k_max") {
            exp->spec.k_max = v;
        } else if (k == "k_min") {
            exp->spec.k_min = v;
        } else if (k == "n") {
            exp->spec.n = v;
        } else if (k == "substeps") {
            exp->spec.substeps = v;
        } else {
            throw ArgumentError("unknown integer key '" + k + "'");
        }
    });
}

af_status af_experiment_set_string(af_experiment* exp, const char* key, const char* value) {
    return guarded([&] {
        require(exp, "experiment");
        require(key, "key");
        require(value, "value");
        const std::string k = key;
        if (k == "experiment") {
            exp->spec.experiment = value;
        } else if (k == "problem") {
            const auto p = problem_from_name(value);
            if (!p) {
                throw ConfigSchemaError(std::string("unknown problem '") + value + "'");
            }
            exp->spec.problem = *p;
        } else if (k == "out") {
            exp->spec.out_dir = value;
        } else {
            throw ArgumentError("unknown string key '" + k + "'");
        }
    });
}

af_status af_experiment_add_model(af_experiment* exp, const char* name) {
    return guarded([&] {
        require(exp, "experiment");
        require(name, "name");
        if (!exp->spec.models) {
            exp->spec.models.emplace();
        }
        exp->spec.models->push_back(name);
    });
}

af_status af_experiment_get_double(const af_experiment* exp, const char* key, double* out) {
    return guarded([&] {
        require(exp, "experiment");
        require(key, "key");
        require(out, "out");
        const std::string k = key;
        if (k == "h") {
            *out = exp->spec.h;
        } else if (k == "mu") {
            *out = exp->spec.mu_or_default();
        } else if (k == "L") {
            *out = exp->spec.L;
        } else if (k == "eps") {
            *out = exp->spec.eps;
        } else if (k == "s") {
            *out = exp->spec.s;
        } else {
            throw ArgumentError("unknown numeric key '" + k + "'");
        }
    });
}

const char* af_experiment_get_string(const af_experiment* exp, const char* key) {
    if (!exp || !key) {
        return nullptr;
    }
    const std::string k = key;
    if (k == "experiment") {
        return exp->spec.experiment.c_str();
    }
    if (k == "out") {
        return exp->spec.out_dir.c_str();
    }
    return nullptr;
}

af_status af_experiment_validate(const af_experiment* exp) {
    return guarded([&] {
        require(exp, "experiment");
        validate_spec(exp->spec);
    });
}

af_status af_experiment_run(af_experiment* exp, int* all_diverged) {
    return guarded([&] {
        require(exp, "experiment");
        const ExperimentResult r = run_experiment(exp->spec);
        exp->manifest.clear();
        for (const ManifestEntry& e : r.manifest) {
            exp->manifest.push_back(e.panel + "=" + e.experiment + ":" + e.file);
        }
        exp->summary = r.summary;
        if (all_diverged) {
            *all_diverged = r.all_diverged() ? 1 : 0;
        }
    });
}

size_t af_experiment_manifest_size(const af_experiment* exp) { return exp ? exp->manifest.size() : 0; }

const char* af_experiment_manifest_line(const af_experiment* exp, size_t index) {
    if (!exp || index >= exp->manifest.size()) {
        return nullptr;
    }
    return exp->manifest[index].c_str();
}

size_t af_experiment_summary_size(const af_experiment* exp) { return exp ? exp->summary.size() : 0; }

const char* af_experiment_summary_line(const af_experiment* exp, size_t index) {
    if (!exp || index >= exp->summary.size()) {
        return nullptr;
    }
    return exp->summary[index].c_str();
}

} // extern "C"
