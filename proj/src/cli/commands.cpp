#include "fduffing/cli/commands.hpp"

#include <CLI11.hpp>
#include <future>
#include <map>
#include <ostream>

#include "fduffing/abm.hpp"
#include "fduffing/errors.hpp"
#include "fduffing/gl_efds.hpp"
#include "fduffing/io.hpp"

namespace fduffing::cli {

namespace {

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string());
    }
}

std::string label_for(const std::filesystem::path& input) {
    std::string stem = input.stem().string();
    const std::string prefix = "trajectory_";
    if (stem.rfind(prefix, 0) == 0) stem = stem.substr(prefix.size());
    return stem;
}

std::vector<std::string> report_notes(const RunConfig& config, const OrderFunction& order) {
    std::vector<std::string> notes;
    notes.push_back(std::string("mode: ") +
                    (config.mode == ErrorMode::ExactSolution ? "exact" : "runge"));
    notes.push_back("order: " + order.describe());
    notes.push_back("T: " + format_double(config.horizon));
    notes.push_back("lambda: " + format_double(config.params.lambda) +
                    ", omega0_sq: " + format_double(config.params.omega0_sq) +
                    ", b: " + format_double(config.params.b));
    notes.push_back("x0: " + format_double(config.params.x0) +
                    ", y0: " + format_double(config.params.y0) +
                    ", z0: " + format_double(config.params.z0));
    if (config.forcing == ForcingChoice::Manufactured) {
        notes.push_back("forcing: manufactured (exact solution x = t^3)");
        if (config.params.x0 != 0.0 || config.params.y0 != 0.0) {
            notes.push_back(
                "note: x = t^3 requires x0 = y0 = 0; the nonzero initial conditions used here "
                "(ic-mode paper) are inconsistent with the exact solution");
        }
        notes.push_back(
            "note: the published test problem does not state its order function; "
            "this run uses the one given above");
    } else if (config.forcing == ForcingChoice::Harmonic) {
        notes.push_back("forcing: harmonic, delta = " + format_double(config.params.delta) +
                        ", omega = " + format_double(config.params.omega));
    } else {
        notes.push_back("forcing: none");
    }
    return notes;
}

}  // namespace

std::vector<std::filesystem::path> cmd_simulate(const RunConfig& config) {
    validate(config);
    const OrderFunction order = resolve_order(config);
    const ForcingSpec forcing = make_forcing(config, order);
    const GridSpec grid(config.horizon, config.steps);

    const auto run_efds = [&] { return efds_solve(config.params, order, forcing, grid); };
    const auto run_abm = [&] { return abm_solve(config.params, order, forcing, grid); };

    std::vector<std::pair<std::string, Trajectory>> results;
    switch (config.scheme) {
        case SchemeChoice::Efds: results.emplace_back("efds", run_efds()); break;
        case SchemeChoice::Abm: results.emplace_back("abm", run_abm()); break;
        case SchemeChoice::Both: {
            auto efds_future = std::async(std::launch::async, run_efds);
            Trajectory abm = run_abm();
            results.emplace_back("efds", efds_future.get());
            results.emplace_back("abm", std::move(abm));
            break;
        }
    }

    ensure_directory(config.out);
    std::vector<std::filesystem::path> written;
    for (const auto& [name, tr] : results) {
        const auto path = config.out / ("trajectory_" + name + ".csv");
        write_file_atomic(path, trajectory_csv(tr));
        written.push_back(path);
    }
    if (results.size() == 2) {
        const auto path = config.out / "diff.csv";
        write_file_atomic(path, diff_csv(results[0].second, results[1].second));
        written.push_back(path);
    }
    return written;
}

std::vector<std::filesystem::path> cmd_converge(const RunConfig& config, std::ostream& warn) {
    if (config.levels < 2) throw ConfigError("--levels must be at least 2");
    if (config.n_start < 1) throw ConfigError("--n-start must be positive");
    if (config.mode == ErrorMode::ExactSolution && config.forcing != ForcingChoice::Manufactured) {
        throw ConfigError("--mode exact needs --forcing manufactured (the only known exact solution)");
    }
    config.params.validate();
    const OrderFunction order = resolve_order(config);
    // Runge mode also solves on the grid after the last level.
    for (std::size_t i = 0; i <= config.levels; ++i) {
        order.validate(GridSpec(config.horizon, config.n_start << i));
    }

    Problem problem;
    problem.params = config.params;
    problem.order = order;
    problem.forcing = make_forcing(config, order);
    problem.horizon = config.horizon;
    problem.exact = exact_cubic;

    ConvergenceReport report = convergence_study(problem, config.n_start, config.levels, config.mode);
    report.notes = report_notes(config, order);
    for (const auto& w : report.warnings) warn << "warning: " << w << '\n';

    ensure_directory(config.out);
    const auto csv_path = config.out / "convergence.csv";
    const auto meta_path = config.out / "convergence_meta.txt";
    std::string meta;
    for (const auto& n : report.notes) meta += n + '\n';
    write_file_atomic(csv_path, convergence_csv(report));
    write_file_atomic(meta_path, meta);
    return {csv_path, meta_path};
}

std::filesystem::path cmd_plot(const PlotOptions& options) {
    if (options.inputs.empty()) throw ConfigError("plot needs at least one --input");
    if (!options.labels.empty() && options.labels.size() != options.inputs.size()) {
        throw ConfigError("give one --label per --input or none");
    }
    std::vector<std::pair<std::string, Trajectory>> trajectories;
    for (std::size_t i = 0; i < options.inputs.size(); ++i) {
        const auto& input = options.inputs[i];
        const std::string label = options.labels.empty() ? label_for(input) : options.labels[i];
        trajectories.emplace_back(label, read_trajectory_csv(input));
    }
    const std::string svg = plot_trajectories(options.kind, trajectories, options.exact_cubic);
    if (options.out.has_parent_path()) ensure_directory(options.out.parent_path());
    write_file_atomic(options.out, svg);
    return options.out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional Duffing oscillator solver (GL explicit scheme and ABM predictor-corrector)"};
    app.require_subcommand(1);

    RunConfig sim_config;
    auto* simulate = app.add_subcommand("simulate", "run solvers and write trajectory CSVs");
    add_run_options(*simulate, sim_config, false);

    RunConfig conv_config;
    auto* converge = app.add_subcommand("converge", "convergence study over a doubling ladder");
    add_run_options(*converge, conv_config, true);

    PlotOptions plot_options;
    auto* plot = app.add_subcommand("plot", "render trajectory CSVs as SVG");
    plot->add_option("--input", plot_options.inputs, "trajectory CSV (repeatable)")->required();
    plot->add_option("--label", plot_options.labels, "legend label per input (repeatable)");
    const std::map<std::string, PlotKind> kinds{{"oscillogram", PlotKind::Oscillogram},
                                                {"phase", PlotKind::Phase},
                                                {"overlay", PlotKind::Overlay}};
    plot->add_option("--kind", plot_options.kind, "oscillogram, phase or overlay")
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case).description(""));
    plot->add_flag("--exact-cubic", plot_options.exact_cubic, "overlay the exact solution t^3");
    plot->add_option("--out", plot_options.out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (simulate->parsed()) {
            finalize_run_config(*simulate, sim_config);
            for (const auto& p : cmd_simulate(sim_config)) out << p.string() << '\n';
        } else if (converge->parsed()) {
            finalize_run_config(*converge, conv_config);
            for (const auto& p : cmd_converge(conv_config, err)) out << p.string() << '\n';
        } else if (plot->parsed()) {
            out << cmd_plot(plot_options).string() << '\n';
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const SolverAbort& e) {
        err << "solver aborted: " << e.what() << '\n';
        return kSolverAbort;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

}  // namespace fduffing::cli
