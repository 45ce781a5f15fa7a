#pragma once

#include "qsm/dynamics.hpp"
#include "qsm/operators.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace qsm::io {

/// Decimal text with 12 significant digits ('.' separator) — the bit-exact
/// contract shared by every CSV emitted here.
std::string format_number(double x);

/// Rows `n,re,im` of a state, lattice order.
void write_state_csv(const std::filesystem::path& path, const StateVector& psi);

/// Rows `t,n,return,prob`, one per sample time per lattice point.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Rows `t,argmax_n,tied_n,expected_return[,expected_price],norm_drift`;
/// the price column is present only when price_base is set. tied_n is a
/// ';'-joined list of signed indices.
void write_summary_csv(const std::filesystem::path& path, const Trajectory& traj,
                       std::optional<double> price_base);

/// Rows `n,g,gamma,gamma_sq` of the finite Gaussian family member.
void write_gaussian_csv(const std::filesystem::path& path, const GridSpec& grid,
                        double alpha);

/// Rows `n,m,re,im` of the full matrix; optionally a trailing
/// `# eigenvalues: ...` comment line.
void write_operator_csv(const std::filesystem::path& path, const HermitianOperator& op,
                        bool with_eigenvalues);

} // namespace qsm::io
