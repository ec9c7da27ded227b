#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fduffing/cli/run_config.hpp"
#include "fduffing/svg_plot.hpp"

namespace fduffing::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kConfigError = 2,
    kSolverAbort = 3,
    kIoError = 4,
};

/// Writes trajectory_<scheme>.csv (and diff.csv for both schemes) into
/// config.out. Returns the written paths.
std::vector<std::filesystem::path> cmd_simulate(const RunConfig& config);

/// Writes convergence.csv and convergence_meta.txt into config.out. Warnings
/// (failed cells, metric-domain errors) go to `warn`, one per line.
std::vector<std::filesystem::path> cmd_converge(const RunConfig& config, std::ostream& warn);

struct PlotOptions {
    std::vector<std::filesystem::path> inputs;
    std::vector<std::string> labels;  // defaults to the input file stems
    PlotKind kind = PlotKind::Oscillogram;
    bool exact_cubic = false;
    std::filesystem::path out = "plot.svg";
};

/// Nothing is written if any input fails to parse.
std::filesystem::path cmd_plot(const PlotOptions& options);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fduffing::cli
