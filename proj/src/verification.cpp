#include "fduffing/verification.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "fduffing/abm.hpp"
#include "fduffing/errors.hpp"
#include "fduffing/gl_efds.hpp"
#include "fduffing/special.hpp"

namespace fduffing {

namespace {

constexpr double kGamma4 = 6.0;

// Gamma(1-q) Gamma(4) t^{4-q} / Gamma(5-q)
double memory_integral(double t, double q) {
    if (t <= 0.0) return 0.0;
    return gamma_function(1.0 - q) * kGamma4 * std::pow(t, 4.0 - q) / gamma_function(5.0 - q);
}

double fractional_term_fd(double t, double lambda, const OrderFunction& order) {
    if (t <= 0.0) return 0.0;
    const double dt = std::max(1e-6, 1e-6 * t);
    const auto g = [&order](double s) { return memory_integral(s, order(s)); };
    const double deriv = t < dt ? (g(t + dt) - g(t)) / dt : (g(t + dt) - g(t - dt)) / (2.0 * dt);
    return lambda / gamma_function(1.0 - order(t)) * deriv;
}

// Fine solution sampled at every second node.
double runge_difference(const Trajectory& coarse, const Trajectory& fine) {
    if (fine.size() != 2 * coarse.size() - 1) {
        throw std::invalid_argument("runge_difference: fine grid must halve the coarse step");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        worst = std::max(worst, std::abs(coarse.x[k] - fine.x[2 * k]));
    }
    return worst;
}

double polynomial_part(double t) {
    const double t3 = t * t * t;
    return t3 * t3 * t3 + t3 + 6.0 * t;
}

}  // namespace

double manufactured_forcing(double t, double lambda, const OrderFunction& order) {
    if (!(t >= 0.0)) {
        throw std::domain_error("manufactured forcing is defined for t >= 0 only");
    }
    if (t == 0.0) return 0.0;
    if (const auto* c = std::get_if<OrderFunction::Constant>(&order.kind())) {
        const double q = c->value;
        return polynomial_part(t) + lambda * kGamma4 * std::pow(t, 3.0 - q) / gamma_function(4.0 - q);
    }
    return polynomial_part(t) + fractional_term_fd(t, lambda, order);
}

double manufactured_forcing_fd(double t, double lambda, const OrderFunction& order) {
    if (!(t >= 0.0)) {
        throw std::domain_error("manufactured forcing is defined for t >= 0 only");
    }
    if (t == 0.0) return 0.0;
    return polynomial_part(t) + fractional_term_fd(t, lambda, order);
}

double max_error(const Trajectory& numeric, const std::function<double(double)>& reference) {
    if (numeric.size() == 0) {
        throw std::invalid_argument("max_error: empty trajectory");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < numeric.size(); ++k) {
        worst = std::max(worst, std::abs(numeric.x[k] - reference(numeric.t[k])));
    }
    return worst;
}

std::vector<double> accuracy_sequence(std::span<const double> errors) {
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0 && errors[i] < 1.0)) {
            throw MetricDomainError("accuracy order needs errors in (0, 1); level " +
                                    std::to_string(i) + " has " + std::to_string(errors[i]));
        }
    }
    std::vector<double> p;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        p.push_back(std::log(errors[i]) / std::log(errors[i + 1]));
    }
    return p;
}

std::vector<double> classical_order_sequence(std::span<const double> errors) {
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0) || !std::isfinite(errors[i])) {
            throw MetricDomainError("classical order needs positive errors; level " +
                                    std::to_string(i) + " has " + std::to_string(errors[i]));
        }
    }
    std::vector<double> p;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        p.push_back(std::log2(errors[i] / errors[i + 1]));
    }
    return p;
}

std::vector<double> runge_errors(const SchemeRunner& solve, std::span<const std::size_t> levels) {
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        if (levels[i + 1] != 2 * levels[i]) {
            throw std::invalid_argument("runge_errors: levels must double");
        }
    }
    const auto run = [&solve](std::size_t n) {
        try {
            return solve(n);
        } catch (const std::exception& e) {
            throw std::runtime_error("level N=" + std::to_string(n) + ": " + e.what());
        }
    };

    std::vector<double> xi;
    xi.reserve(levels.size());
    Trajectory coarse;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i == 0) coarse = run(levels[0]);
        Trajectory fine = run(2 * levels[i]);
        xi.push_back(runge_difference(coarse, fine));
        coarse = std::move(fine);
    }
    return xi;
}

Problem manufactured_problem(IcMode ic_mode, OrderFunction order) {
    Problem p;
    p.params.lambda = 0.1;
    p.params.omega0_sq = 1.0;
    p.params.b = 1.0;
    p.params.delta = 0.0;
    p.params.omega = 0.0;
    p.params.x0 = ic_mode == IcMode::Paper ? 0.01 : 0.0;
    p.params.y0 = ic_mode == IcMode::Paper ? 0.03 : 0.0;
    p.params.z0 = 0.0;
    p.forcing = ForcingSpec::manufactured(p.params.lambda, order);
    p.order = std::move(order);
    p.horizon = 1.0;
    p.exact = exact_cubic;
    return p;
}

OrderFunction manufactured_default_order() { return OrderFunction::linear(0.8, -0.5); }

Problem limit_cycle_problem(double horizon) {
    Problem p;
    p.params = OscillatorParams{};  // all coefficients 1, zero initial state
    p.order = OrderFunction::linear(0.8, -0.005);
    p.forcing = ForcingSpec::harmonic(p.params.delta, p.params.omega);
    p.horizon = horizon;
    return p;
}

namespace {

struct Column {
    std::vector<std::optional<double>> xi;
    std::vector<std::optional<double>> p;
    std::vector<std::optional<double>> p2;
};

Column run_column(const char* name, const SchemeRunner& runner,
                  const std::function<double(double)>& exact, std::span<const std::size_t> ns,
                  ErrorMode mode, std::vector<std::string>& warnings) {
    Column col;
    col.xi.assign(ns.size(), std::nullopt);
    col.p.assign(ns.size(), std::nullopt);
    col.p2.assign(ns.size(), std::nullopt);

    if (mode == ErrorMode::ExactSolution) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            try {
                col.xi[i] = max_error(runner(ns[i]), exact);
            } catch (const std::exception& e) {
                warnings.push_back(std::string(name) + " N=" + std::to_string(ns[i]) + ": " +
                                   e.what());
            }
        }
    } else {
        // Each trajectory serves as the fine solution of one level and the
        // coarse solution of the next.
        std::vector<std::optional<Trajectory>> solved(ns.size() + 1);
        for (std::size_t i = 0; i <= ns.size(); ++i) {
            const std::size_t n = i < ns.size() ? ns[i] : 2 * ns.back();
            try {
                solved[i] = runner(n);
            } catch (const std::exception& e) {
                warnings.push_back(std::string(name) + " N=" + std::to_string(n) + ": " +
                                   e.what());
            }
        }
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (!solved[i] || !solved[i + 1]) continue;
            col.xi[i] = runge_difference(*solved[i], *solved[i + 1]);
        }
    }

    for (std::size_t i = 1; i < ns.size(); ++i) {
        if (!col.xi[i - 1] || !col.xi[i]) continue;
        const double pair[] = {*col.xi[i - 1], *col.xi[i]};
        try {
            col.p[i] = accuracy_sequence(pair).front();
        } catch (const MetricDomainError& e) {
            warnings.push_back(std::string(name) + " p at N=" + std::to_string(ns[i]) + ": " +
                               e.what());
        }
        try {
            col.p2[i] = classical_order_sequence(pair).front();
        } catch (const MetricDomainError& e) {
            warnings.push_back(std::string(name) + " p2 at N=" + std::to_string(ns[i]) + ": " +
                               e.what());
        }
    }
    return col;
}

}  // namespace

ConvergenceReport convergence_study(const SchemeRunner& efds, const SchemeRunner& abm,
                                    const std::function<double(double)>& exact, double horizon,
                                    std::size_t n_start, std::size_t levels, ErrorMode mode) {
    if (levels < 2) throw std::invalid_argument("convergence_study: need at least two levels");
    if (n_start < 1) throw std::invalid_argument("convergence_study: N_start must be positive");
    if (mode == ErrorMode::ExactSolution && !exact) {
        throw std::invalid_argument("convergence_study: exact-solution mode needs a reference");
    }

    std::vector<std::size_t> ns(levels);
    for (std::size_t i = 0; i < levels; ++i) ns[i] = n_start << i;

    std::vector<std::string> efds_warnings;
    std::vector<std::string> abm_warnings;
    auto efds_future = std::async(std::launch::async, [&] {
        return run_column("efds", efds, exact, ns, mode, efds_warnings);
    });
    Column abm_col = run_column("abm", abm, exact, ns, mode, abm_warnings);
    Column efds_col = efds_future.get();

    ConvergenceReport report;
    report.mode = mode;
    for (std::size_t i = 0; i < levels; ++i) {
        ConvergenceRow row;
        row.n = ns[i];
        row.h = horizon / static_cast<double>(ns[i]);
        row.xi_efds = efds_col.xi[i];
        row.p_efds = efds_col.p[i];
        row.p2_efds = efds_col.p2[i];
        row.xi_abm = abm_col.xi[i];
        row.p_abm = abm_col.p[i];
        row.p2_abm = abm_col.p2[i];
        report.rows.push_back(row);
    }
    report.warnings = std::move(efds_warnings);
    report.warnings.insert(report.warnings.end(), abm_warnings.begin(), abm_warnings.end());
    return report;
}

ConvergenceReport convergence_study(const Problem& problem, std::size_t n_start,
                                    std::size_t levels, ErrorMode mode) {
    const SchemeRunner efds = [&problem](std::size_t n) {
        return efds_solve(problem.params, problem.order, problem.forcing,
                          GridSpec(problem.horizon, n));
    };
    const SchemeRunner abm = [&problem](std::size_t n) {
        return abm_solve(problem.params, problem.order, problem.forcing,
                         GridSpec(problem.horizon, n));
    };
    return convergence_study(efds, abm, problem.exact, problem.horizon, n_start, levels, mode);
}

}  // namespace fduffing
