#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fduffing/model.hpp"
#include "fduffing/verification.hpp"

namespace CLI {
class App;
}

namespace fduffing::cli {

enum class SchemeChoice { Efds, Abm, Both };
enum class ForcingChoice { None, Harmonic, Manufactured };

/// Everything a `simulate` or `converge` run needs; flags fully determine it.
struct RunConfig {
    SchemeChoice scheme = SchemeChoice::Both;
    OscillatorParams params;
    std::string order = "linear:0.8:-0.005";
    ForcingChoice forcing = ForcingChoice::Harmonic;
    double horizon = 100.0;
    std::size_t steps = 1800;
    std::filesystem::path out = ".";
    IcMode ic_mode = IcMode::Paper;  // only used with manufactured forcing

    // converge only
    std::size_t n_start = 10;
    std::size_t levels = 8;
    ErrorMode mode = ErrorMode::ExactSolution;
};

/// `const:<a>` | `linear:<a>:<slope>` (q = a + slope t) | `table:<path>`.
/// A table file holds `t,q` rows; a non-numeric first line is a header.
OrderFunction parse_order_spec(std::string_view spec);

/// Registers the shared run flags on `app`, writing into `config`.
/// `with_converge` adds --n-start, --levels, --mode.
void add_run_options(CLI::App& app, RunConfig& config, bool with_converge);

/// Applies --ic-mode (when --x0/--y0 were not given explicitly) after parsing.
void finalize_run_config(const CLI::App& app, RunConfig& config);

/// Parses flags (without program or subcommand name). Throws ConfigError.
RunConfig parse_run_config(const std::vector<std::string>& args, bool with_converge);

/// Renders a config back to flags that parse to an equivalent config.
std::vector<std::string> to_args(const RunConfig& config, bool with_converge);

/// Resolved order function, checked on the run's grid. Throws ConfigError.
OrderFunction resolve_order(const RunConfig& config);

ForcingSpec make_forcing(const RunConfig& config, const OrderFunction& order);

/// Validates parameters, grid and order range without running anything.
void validate(const RunConfig& config);

}  // namespace fduffing::cli
