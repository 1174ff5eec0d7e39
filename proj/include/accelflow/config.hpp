#pragma once

#include "accelflow/problems.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace accelflow {

enum class ProblemKind { Paper2d, Restart2d, RandQuad };

std::string_view problem_name(ProblemKind kind);
std::optional<ProblemKind> problem_from_name(std::string_view name);

/// One harness run. `mu` left empty means the experiment's own default
/// (0.001 for EXP2 and EXP5, 0 otherwise).
struct ExperimentSpec {
    std::string experiment = "EXP1";   // EXP1..EXP6, simulate, nag, suite
    ProblemKind problem = ProblemKind::Paper2d;
    int n = 200;                       // randquad dimension
    std::uint64_t seed = 7;
    std::optional<std::vector<std::string>> models;   // unset: the experiment's default set
    double h = 1.0;
    int k_max = 300;
    std::optional<double> mu;
    double L = 1.0;
    double eps = 1.0;
    int k_min = 20;
    int substeps = 100;
    double s = 1.0;                    // step parameter of the Shi / Chen models
    std::vector<double> h_values{1.0, 0.1, 0.01};
    std::optional<std::vector<double>> x0;
    std::string out_dir = "out";

    double mu_or_default() const;
};

/// Reads and validates a JSON config. Throws FileNotFoundError,
/// ConfigParseError (with the 1-based line) or ConfigSchemaError.
ExperimentSpec load_config(const std::string& path);

/// Same as load_config on an in-memory document.
ExperimentSpec parse_config(std::string_view text);

/// Range and consistency checks; throws ConfigSchemaError.
void validate_spec(const ExperimentSpec& spec);

/// Objective for the spec's problem with its configured (L, mu).
Objective make_problem(const ExperimentSpec& spec);

/// (1, 1) for the 2-D problems, a seeded standard-normal draw for randquad,
/// or the spec's explicit x0.
Vector initial_point(const ExperimentSpec& spec);

} // namespace accelflow
