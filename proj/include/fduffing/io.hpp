#pragma once

// CSV and file helpers. All numeric output uses '.' as decimal separator and
// 17 significant digits, independent of the C++ or C locale.

#include <filesystem>
#include <string>
#include <string_view>

#include "fduffing/model.hpp"
#include "fduffing/verification.hpp"

namespace fduffing {

std::string format_double(double value);

/// Parses a full-field decimal number. Throws std::invalid_argument.
double parse_double(std::string_view text);

/// Header `t,x,y,aux` followed by one row per node, LF line endings.
std::string trajectory_csv(const Trajectory& trajectory);

/// Header `t,abs_dx`; both trajectories must share the grid.
std::string diff_csv(const Trajectory& a, const Trajectory& b);

/// Header `N,h,xi_efds,p_efds,xi_abm,p_abm,p2_efds,p2_abm`; missing cells empty.
std::string convergence_csv(const ConvergenceReport& report);

/// Parses the trajectory format. Throws IoError naming the offending line.
/// An input with no data rows is an error.
Trajectory parse_trajectory_csv(std::string_view text, Scheme scheme = Scheme::Efds);

Trajectory read_trajectory_csv(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace fduffing
