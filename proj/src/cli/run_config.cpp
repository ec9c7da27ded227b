#include "fduffing/cli/run_config.hpp"

#include <CLI11.hpp>
#include <map>

#include "fduffing/errors.hpp"
#include "fduffing/io.hpp"

namespace fduffing::cli {

namespace {

double parse_number(std::string_view text, std::string_view what) {
    try {
        return parse_double(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad " + std::string(what) + " '" + std::string(text) + "'");
    }
}

OrderFunction load_order_table(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const IoError& e) {
        throw ConfigError(std::string("order table: ") + e.what());
    }
    std::vector<double> nodes;
    std::vector<double> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) {
            throw ConfigError("order table " + path.string() + " line " +
                              std::to_string(line_no) + ": expected 't,q'");
        }
        try {
            const double t = parse_double(line.substr(0, comma));
            const double q = parse_double(line.substr(comma + 1));
            nodes.push_back(t);
            values.push_back(q);
        } catch (const std::invalid_argument&) {
            if (line_no == 1 && nodes.empty()) continue;  // header
            throw ConfigError("order table " + path.string() + " line " +
                              std::to_string(line_no) + ": not a number");
        }
    }
    return OrderFunction::tabulated(std::move(nodes), std::move(values));
}

const std::map<std::string, SchemeChoice> kSchemes{
    {"efds", SchemeChoice::Efds}, {"abm", SchemeChoice::Abm}, {"both", SchemeChoice::Both}};
const std::map<std::string, ForcingChoice> kForcings{{"none", ForcingChoice::None},
                                                     {"harmonic", ForcingChoice::Harmonic},
                                                     {"manufactured", ForcingChoice::Manufactured}};
const std::map<std::string, IcMode> kIcModes{{"paper", IcMode::Paper},
                                             {"consistent", IcMode::Consistent}};
const std::map<std::string, ErrorMode> kModes{{"exact", ErrorMode::ExactSolution},
                                              {"runge", ErrorMode::RungeRule}};

template <class Enum>
std::string key_of(const std::map<std::string, Enum>& table, Enum value) {
    for (const auto& [k, v] : table) {
        if (v == value) return k;
    }
    return {};
}

}  // namespace

OrderFunction parse_order_spec(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("order spec '" + std::string(spec) +
                          "' must be const:<a>, linear:<a>:<slope> or table:<path>");
    }
    const auto kind = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    if (kind == "const") {
        return OrderFunction::constant(parse_number(rest, "order constant"));
    }
    if (kind == "linear") {
        const auto sep = rest.find(':');
        if (sep == std::string_view::npos) {
            throw ConfigError("linear order needs linear:<a>:<slope>");
        }
        return OrderFunction::linear(parse_number(rest.substr(0, sep), "order intercept"),
                                     parse_number(rest.substr(sep + 1), "order slope"));
    }
    if (kind == "table") {
        return load_order_table(std::filesystem::path(std::string(rest)));
    }
    throw ConfigError("unknown order kind '" + std::string(kind) + "'");
}

void add_run_options(CLI::App& app, RunConfig& c, bool with_converge) {
    app.add_option("--scheme", c.scheme, "efds, abm or both")
        ->transform(CLI::CheckedTransformer(kSchemes, CLI::ignore_case).description(""));
    app.add_option("--lambda", c.params.lambda, "friction coefficient");
    app.add_option("--omega0-sq", c.params.omega0_sq, "natural frequency squared");
    app.add_option("--b", c.params.b, "cubic stiffness coefficient");
    app.add_option("--delta", c.params.delta, "forcing amplitude");
    app.add_option("--omega", c.params.omega, "forcing frequency");
    app.add_option("--x0", c.params.x0, "initial displacement");
    app.add_option("--y0", c.params.y0, "initial velocity");
    app.add_option("--z0", c.params.z0, "initial value of the ABM auxiliary variable");
    app.add_option("--T", c.horizon, "simulation horizon");
    app.add_option("--N", c.steps, "number of steps");
    app.add_option("--order", c.order, "const:<a> | linear:<a>:<slope> | table:<path>");
    app.add_option("--forcing", c.forcing, "none, harmonic or manufactured")
        ->transform(CLI::CheckedTransformer(kForcings, CLI::ignore_case).description(""));
    app.add_option("--out", c.out, "output directory");
    app.add_option("--ic-mode", c.ic_mode,
                   "initial conditions for manufactured forcing: paper (0.01, 0.03) or "
                   "consistent (0, 0)")
        ->transform(CLI::CheckedTransformer(kIcModes, CLI::ignore_case).description(""));
    if (with_converge) {
        app.add_option("--n-start", c.n_start, "coarsest step count");
        app.add_option("--levels", c.levels, "number of doubling levels (>= 2)");
        app.add_option("--mode", c.mode, "exact or runge")
            ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case).description(""));
    }
}

void finalize_run_config(const CLI::App& app, RunConfig& c) {
    if (c.forcing != ForcingChoice::Manufactured) return;
    const bool paper = c.ic_mode == IcMode::Paper;
    if (app.count("--x0") == 0) c.params.x0 = paper ? 0.01 : 0.0;
    if (app.count("--y0") == 0) c.params.y0 = paper ? 0.03 : 0.0;
}

RunConfig parse_run_config(const std::vector<std::string>& args, bool with_converge) {
    RunConfig config;
    CLI::App app{"run config"};
    add_run_options(app, config, with_converge);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    finalize_run_config(app, config);
    return config;
}

std::vector<std::string> to_args(const RunConfig& c, bool with_converge) {
    std::vector<std::string> a = {
        "--scheme",    key_of(kSchemes, c.scheme),
        "--lambda",    format_double(c.params.lambda),
        "--omega0-sq", format_double(c.params.omega0_sq),
        "--b",         format_double(c.params.b),
        "--delta",     format_double(c.params.delta),
        "--omega",     format_double(c.params.omega),
        "--x0",        format_double(c.params.x0),
        "--y0",        format_double(c.params.y0),
        "--z0",        format_double(c.params.z0),
        "--T",         format_double(c.horizon),
        "--N",         std::to_string(c.steps),
        "--order",     c.order,
        "--forcing",   key_of(kForcings, c.forcing),
        "--out",       c.out.string(),
        "--ic-mode",   key_of(kIcModes, c.ic_mode),
    };
    if (with_converge) {
        a.insert(a.end(), {"--n-start", std::to_string(c.n_start), "--levels",
                           std::to_string(c.levels), "--mode", key_of(kModes, c.mode)});
    }
    return a;
}

OrderFunction resolve_order(const RunConfig& config) {
    return parse_order_spec(config.order);
}

ForcingSpec make_forcing(const RunConfig& config, const OrderFunction& order) {
    switch (config.forcing) {
        case ForcingChoice::None: return ForcingSpec::none();
        case ForcingChoice::Harmonic:
            return ForcingSpec::harmonic(config.params.delta, config.params.omega);
        case ForcingChoice::Manufactured:
            return ForcingSpec::manufactured(config.params.lambda, order);
    }
    return ForcingSpec::none();
}

void validate(const RunConfig& config) {
    config.params.validate();
    const GridSpec grid(config.horizon, config.steps);
    resolve_order(config).validate(grid);
}

}  // namespace fduffing::cli
