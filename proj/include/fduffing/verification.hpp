#pragma once

// Manufactured-solution test problem, error metrics and convergence studies.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fduffing/model.hpp"

namespace fduffing {

/// f(t) = t^9 + t^3 + 6t + lambda / Gamma(1-q(t)) * d/dt[Gamma(1-q(t)) Gamma(4) t^{4-q(t)} / Gamma(5-q(t))]
///
/// With omega0^2 = b = 1 the model is then solved by x(t) = t^3. Constant
/// orders use the closed form lambda Gamma(4) t^{3-q} / Gamma(4-q); other
/// orders differentiate numerically (see manufactured_forcing_fd).
double manufactured_forcing(double t, double lambda, const OrderFunction& order);

/// Same as manufactured_forcing but always takes the time derivative by
/// central difference with step max(1e-6, 1e-6 t) (forward difference when
/// t is below the step).
double manufactured_forcing_fd(double t, double lambda, const OrderFunction& order);

/// Exact solution of the manufactured problem.
inline double exact_cubic(double t) { return t * t * t; }

/// max_k |x_k - reference(t_k)|.
double max_error(const Trajectory& numeric, const std::function<double(double)>& reference);

/// p_i = ln(e_i) / ln(e_{i+1}). Every error must lie in (0, 1); throws
/// MetricDomainError otherwise.
std::vector<double> accuracy_sequence(std::span<const double> errors);

/// Classical empirical order log2(e_i / e_{i+1}). Throws MetricDomainError
/// for non-positive errors.
std::vector<double> classical_order_sequence(std::span<const double> errors);

/// Runs a scheme on a grid with the given number of steps.
using SchemeRunner = std::function<Trajectory(std::size_t steps)>;

/// Double recalculation: for each level N, max over coarse nodes of
/// |x_N(t_k) - x_2N(t_2k)|. Levels must double. Solver failures are
/// rethrown as std::runtime_error naming the level.
std::vector<double> runge_errors(const SchemeRunner& solve, std::span<const std::size_t> levels);

enum class ErrorMode { ExactSolution, RungeRule };

struct ConvergenceRow {
    std::size_t n = 0;
    double h = 0.0;
    std::optional<double> xi_efds;
    std::optional<double> p_efds;
    std::optional<double> xi_abm;
    std::optional<double> p_abm;
    std::optional<double> p2_efds;  // log2 ratio order
    std::optional<double> p2_abm;
};

struct ConvergenceReport {
    ErrorMode mode = ErrorMode::ExactSolution;
    std::vector<ConvergenceRow> rows;
    std::vector<std::string> warnings;  // failed cells and metric-domain errors
    std::vector<std::string> notes;     // problem description for the report header
};

/// Problem to run a convergence study on. The grid horizon is fixed and the
/// step count varies.
struct Problem {
    OscillatorParams params;
    OrderFunction order = OrderFunction::constant(0.5);
    ForcingSpec forcing = ForcingSpec::none();
    double horizon = 1.0;
    std::function<double(double)> exact;  // required for ErrorMode::ExactSolution
};

/// Initial conditions for the manufactured test: the published ones
/// (x0 = 0.01, y0 = 0.03) or the ones consistent with x = t^3 (0, 0).
enum class IcMode { Paper, Consistent };

/// Manufactured test: lambda = 0.1, delta = 0, T = 1, omega0^2 = b = 1.
Problem manufactured_problem(IcMode ic_mode, OrderFunction order);

/// Default order of the manufactured test, q(t) = 0.8 - t/(2T) with T = 1.
OrderFunction manufactured_default_order();

/// Harmonically forced limit-cycle example: lambda = delta = omega = omega0^2 = b = 1,
/// x0 = y0 = 0, order q(t) = 0.8 - t/200.
Problem limit_cycle_problem(double horizon);

/// Runs both schemes over N_start, 2 N_start, ... (levels entries) and
/// fills errors and orders. Levels run concurrently.
ConvergenceReport convergence_study(const SchemeRunner& efds, const SchemeRunner& abm,
                                    const std::function<double(double)>& exact, double horizon,
                                    std::size_t n_start, std::size_t levels, ErrorMode mode);

ConvergenceReport convergence_study(const Problem& problem, std::size_t n_start,
                                    std::size_t levels, ErrorMode mode);

}  // namespace fduffing
