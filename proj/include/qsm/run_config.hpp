#pragma once

#include "qsm/dynamics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qsm {

/// Full configuration of one `simulate` run. Defaults reproduce the headline
/// experiment: q=10, gamma_0.2 opening state, mu=1, beta=0.1, omega=1e-4,
/// six sample times across a trading day.
struct RunConfig {
    int q = 10;
    double alpha = 0.2;
    double mu = 1.0;
    double beta = 0.1;
    double omega = 1e-4;
    double dt = 1.0;
    std::vector<double> times = {0.0, 1800.0, 3600.0, 7200.0, 14400.0, 28800.0};
    IntegrationMethod method = IntegrationMethod::unitary_midpoint;
    std::optional<double> price_base;
    std::string output_dir = ".";
    bool emit_svg = false;
};

std::string method_name(IntegrationMethod method);
IntegrationMethod parse_method(const std::string& name);

/// Checks every RunConfig invariant (grid/evolution preconditions, times
/// non-empty, non-negative, strictly increasing, multiples of dt) and throws
/// InvalidArgument with an actionable message on the first violation.
void validate(const RunConfig& config);

/// Reads a flat JSON object with the RunConfig field names; absent fields
/// keep their defaults. Unknown keys are rejected.
RunConfig load_run_config(const std::filesystem::path& path);

/// Writes the resolved configuration as JSON (the `run.json` echo).
void write_run_config(const std::filesystem::path& path, const RunConfig& config);

} // namespace qsm
