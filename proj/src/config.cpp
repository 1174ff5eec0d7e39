#include "accelflow/config.hpp"

#include "accelflow/error.hpp"
#include "accelflow/flows.hpp"
#include "accelflow/nag.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace accelflow {

using nlohmann::json;

namespace {

const std::array<std::string_view, 7> kExperiments{"EXP1", "EXP2", "EXP3", "EXP4", "EXP5", "EXP6", "simulate"};

bool known_experiment(std::string_view id) {
    return std::find(kExperiments.begin(), kExperiments.end(), id) != kExperiments.end() || id == "nag" ||
           id == "suite";
}

int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

double get_number(const json& j, const char* key) {
    if (!j.is_number()) {
        throw ConfigSchemaError(std::string("config key '") + key + "' must be a number");
    }
    return j.get<double>();
}

long long get_integer(const json& j, const char* key) {
    if (!j.is_number_integer()) {
        throw ConfigSchemaError(std::string("config key '") + key + "' must be an integer");
    }
    return j.get<long long>();
}

std::string get_string(const json& j, const char* key) {
    if (!j.is_string()) {
        throw ConfigSchemaError(std::string("config key '") + key + "' must be a string");
    }
    return j.get<std::string>();
}

std::vector<double> get_number_list(const json& j, const char* key) {
    if (!j.is_array()) {
        throw ConfigSchemaError(std::string("config key '") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (const json& e : j) {
        out.push_back(get_number(e, key));
    }
    return out;
}

} // namespace

std::string_view problem_name(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::Paper2d: return "paper2d";
    case ProblemKind::Restart2d: return "restart2d";
    case ProblemKind::RandQuad: return "randquad";
    }
    return "?";
}

std::optional<ProblemKind> problem_from_name(std::string_view name) {
    for (ProblemKind k : {ProblemKind::Paper2d, ProblemKind::Restart2d, ProblemKind::RandQuad}) {
        if (problem_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

double ExperimentSpec::mu_or_default() const {
    if (mu) {
        return *mu;
    }
    return experiment == "EXP2" || experiment == "EXP5" ? 0.001 : 0.0;
}

ExperimentSpec parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const int line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ConfigParseError("config parse error at line " + std::to_string(line) + ": " + e.what(), line);
    }
    if (!doc.is_object()) {
        throw ConfigSchemaError("config root must be an object");
    }
    ExperimentSpec spec;
    for (const auto& [key, value] : doc.items()) {
        const char* k = key.c_str();
        if (key == "experiment") {
            spec.experiment = get_string(value, k);
        } else if (key == "problem") {
            const std::string p = get_string(value, k);
            const auto kind = problem_from_name(p);
            if (!kind) {
                throw ConfigSchemaError("unknown problem '" + p + "'");
            }
            spec.problem = *kind;
        } else if (key == "n") {
            spec.n = static_cast<int>(get_integer(value, k));
        } else if (key == "seed") {
            const long long s = get_integer(value, k);
            if (s < 0) {
                throw ConfigSchemaError("seed must be non-negative");
            }
            spec.seed = static_cast<std::uint64_t>(s);
        } else if (key == "models") {
            if (!value.is_array()) {
                throw ConfigSchemaError("config key 'models' must be an array of names");
            }
            std::vector<std::string> names;
            for (const json& m : value) {
                names.push_back(get_string(m, k));
            }
            spec.models = std::move(names);
        } else if (key == "h") {
            spec.h = get_number(value, k);
        } else if (key == "k_max") {
            spec.k_max = static_cast<int>(get_integer(value, k));
        } else if (key == "mu") {
            spec.mu = get_number(value, k);
        } else if (key == "L") {
            spec.L = get_number(value, k);
        } else if (key == "eps") {
            spec.eps = get_number(value, k);
        } else if (key == "k_min") {
            spec.k_min = static_cast<int>(get_integer(value, k));
        } else if (key == "substeps") {
            spec.substeps = static_cast<int>(get_integer(value, k));
        } else if (key == "s") {
            spec.s = get_number(value, k);
        } else if (key == "h_values") {
            spec.h_values = get_number_list(value, k);
        } else if (key == "x0") {
            spec.x0 = get_number_list(value, k);
        } else if (key == "out") {
            spec.out_dir = get_string(value, k);
        } else {
            throw ConfigSchemaError("unknown config key '" + key + "'");
        }
    }
    validate_spec(spec);
    return spec;
}

ExperimentSpec load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileNotFoundError("config file not found: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate_spec(const ExperimentSpec& spec) {
    auto fail = [](const std::string& why) { throw ConfigSchemaError(why); };
    if (!known_experiment(spec.experiment)) {
        fail("unknown experiment '" + spec.experiment + "'");
    }
    if (!(spec.h > 0.0) || !std::isfinite(spec.h)) {
        fail("h must be positive");
    }
    if (spec.k_max < 1) {
        fail("k_max must be at least 1");
    }
    if (!(spec.L > 0.0)) {
        fail("L must be positive");
    }
    const double mu = spec.mu_or_default();
    if (!(mu >= 0.0) || mu > spec.L) {
        fail("mu must satisfy 0 <= mu <= L");
    }
    if (!(spec.eps > 0.0)) {
        fail("eps must be positive");
    }
    if (spec.k_min < 1) {
        fail("k_min must be at least 1");
    }
    if (spec.substeps < 1) {
        fail("substeps must be at least 1");
    }
    if (!(spec.s > 0.0)) {
        fail("s must be positive");
    }
    if (spec.n < 1) {
        fail("n must be at least 1");
    }
    if (spec.h_values.empty()) {
        fail("h_values must not be empty");
    }
    for (double h : spec.h_values) {
        if (!(h > 0.0)) {
            fail("h_values entries must be positive");
        }
    }
    if (spec.models && spec.models->empty()) {
        throw ArgumentError("model list is empty");
    }
    for (const std::string& name : spec.models.value_or(std::vector<std::string>{})) {
        if (const auto kind = model_from_name(name)) {
            if (model_requires_mu(*kind) && !(mu > 0.0)) {
                fail("model " + name + " requires mu > 0");
            }
        } else if (const auto v = variant_from_name(name)) {
            if ((*v == NagVariant::SC || *v == NagVariant::ConstantSC) && !(mu > 0.0)) {
                fail("method " + name + " requires mu > 0");
            }
        } else {
            fail("unknown model '" + name + "'");
        }
    }
    if (spec.x0) {
        const int dim = spec.problem == ProblemKind::RandQuad ? spec.n : 2;
        if (static_cast<int>(spec.x0->size()) != dim) {
            fail("x0 has " + std::to_string(spec.x0->size()) + " entries, problem dimension is " +
                 std::to_string(dim));
        }
    }
}

Objective make_problem(const ExperimentSpec& spec) {
    const double mu = spec.mu_or_default();
    switch (spec.problem) {
    case ProblemKind::Paper2d: {
        const std::array<double, 2> c{0.02, 0.005};
        return make_diag_quadratic(c).with_parameters(spec.L, mu);
    }
    case ProblemKind::Restart2d: {
        const std::array<double, 2> c{0.5, 0.49};
        return make_diag_quadratic(c).with_parameters(spec.L, mu);
    }
    case ProblemKind::RandQuad:
        return make_random_spd_quadratic(spec.n, mu, spec.L, spec.seed);
    }
    throw ArgumentError("unknown problem");
}

Vector initial_point(const ExperimentSpec& spec) {
    if (spec.x0) {
        return Eigen::Map<const Vector>(spec.x0->data(), static_cast<Eigen::Index>(spec.x0->size()));
    }
    if (spec.problem != ProblemKind::RandQuad) {
        return Vector::Ones(2);
    }
    std::mt19937_64 rng(spec.seed + 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector x(spec.n);
    for (int i = 0; i < spec.n; ++i) {
        x(i) = normal(rng);
    }
    return x;
}

} // namespace accelflow
