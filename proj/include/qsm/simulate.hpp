#pragma once

#include "qsm/run_config.hpp"

#include <filesystem>
#include <vector>

namespace qsm {

/// Files produced by run_simulation, plus the trajectory itself for callers
/// that want the numbers without re-reading the CSVs.
struct SimulationOutputs {
    std::filesystem::path trajectory_csv;
    std::filesystem::path summary_csv;
    std::filesystem::path run_json;
    std::vector<std::filesystem::path> svg_files;
    Trajectory trajectory;
};

/// The end-to-end simulate pipeline: validate config, build gamma_alpha as
/// the opening state, integrate, and write trajectory.csv, summary.csv,
/// run.json and (optionally) one SVG bar chart per sample time into
/// config.output_dir (created if needed).
SimulationOutputs run_simulation(const RunConfig& config);

} // namespace qsm
