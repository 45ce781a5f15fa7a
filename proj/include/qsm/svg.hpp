#pragma once

#include "qsm/grid.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace qsm::svg {

/// Standalone SVG bar chart of per-lattice-point values (probabilities or
/// amplitudes) against the return fraction. No plotting dependency; the
/// markup is generated directly and deterministically.
void write_bar_chart(const std::filesystem::path& path, const GridSpec& grid,
                     const std::vector<double>& values, const std::string& title,
                     const std::string& y_label);

} // namespace qsm::svg
