#include "fduffing/abm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fduffing/errors.hpp"
#include "fduffing/special.hpp"

namespace fduffing {

namespace {

// 0^p = 0 for p > 0 without relying on pow's edge cases.
double power(double base, double exponent) {
    return base == 0.0 ? 0.0 : std::pow(base, exponent);
}

double weighted_sum(const std::vector<double>& w, const std::vector<double>& v, std::size_t count) {
    double sum = 0.0;
    for (std::size_t j = 0; j < count; ++j) sum += w[j] * v[j];
    return sum;
}

}  // namespace

ABMWeights abm_weights(std::size_t n, double q) {
    if (!(q > 0.0 && q <= 1.0)) {
        throw std::invalid_argument("abm_weights: order must lie in (0, 1], got " +
                                    std::to_string(q));
    }
    ABMWeights w{n, q, std::vector<double>(n + 2), std::vector<double>(n + 1)};
    const double nn = static_cast<double>(n);

    w.rho[0] = power(nn, q + 1.0) - (nn - q) * std::pow(nn + 1.0, q);
    for (std::size_t j = 1; j <= n; ++j) {
        const double m = static_cast<double>(n - j);
        w.rho[j] = std::pow(m + 2.0, q + 1.0) + power(m, q + 1.0) - 2.0 * std::pow(m + 1.0, q + 1.0);
    }
    w.rho[n + 1] = 1.0;

    for (std::size_t j = 0; j <= n; ++j) {
        const double m = static_cast<double>(n - j);
        w.theta[j] = std::pow(m + 1.0, q) - power(m, q);
    }
    return w;
}

double abm_rhs(const OscillatorParams& params, double f, double x, double z) {
    return f - params.lambda * z - params.omega0_sq * x - params.b * x * x * x;
}

std::array<double, 3> abm_orders(const OrderFunction& order, double t) {
    const double q = order.eval(t);
    return {1.0, 1.0 - q, q};
}

ABMStepWeights abm_step_weights(std::size_t n, const std::array<double, 3>& orders) {
    return {abm_weights(n, orders[0]), abm_weights(n, orders[1]), abm_weights(n, orders[2])};
}

ABMTriple abm_predictor(const ABMState& state, const ABMStepWeights& weights,
                        const OscillatorParams& params, const GridSpec& grid, std::size_t n) {
    if (state.size() < n + 1) {
        throw std::invalid_argument("abm_predictor: state is missing nodes");
    }
    const double h = grid.step();
    const auto scale = [h](double q) { return std::pow(h, q) / gamma_function(q + 1.0); };
    const auto& [w1, w2, w3] = weights;
    return {
        params.x0 + scale(w1.order) * weighted_sum(w1.theta, state.y, n + 1),
        params.y0 + scale(w2.order) * weighted_sum(w2.theta, state.z, n + 1),
        params.z0 + scale(w3.order) * weighted_sum(w3.theta, state.rhs, n + 1),
    };
}

ABMTriple abm_corrector(const ABMState& state, const ABMTriple& predicted,
                        const ABMStepWeights& weights, const OscillatorParams& params,
                        const GridSpec& grid, std::size_t n, double f_next) {
    if (state.size() < n + 1) {
        throw std::invalid_argument("abm_corrector: state is missing nodes");
    }
    const double h = grid.step();
    const auto scale = [h](double q) { return std::pow(h, q) / gamma_function(q + 2.0); };
    const auto& [w1, w2, w3] = weights;
    // rho[n+1] = 1 multiplies the predicted value.
    const ABMTriple out{
        params.x0 + scale(w1.order) * (predicted.y + weighted_sum(w1.rho, state.y, n + 1)),
        params.y0 + scale(w2.order) * (predicted.z + weighted_sum(w2.rho, state.z, n + 1)),
        params.z0 + scale(w3.order) * (abm_rhs(params, f_next, predicted.x, predicted.z) +
                                       weighted_sum(w3.rho, state.rhs, n + 1)),
    };
    if (!std::isfinite(out.x) || !std::isfinite(out.y) || !std::isfinite(out.z)) {
        throw SolverAbort("abm", n + 1);
    }
    return out;
}

Trajectory abm_solve(const OscillatorParams& params, const OrderFunction& order,
                     const ForcingSpec& forcing, const GridSpec& grid) {
    params.validate();
    order.validate(grid);

    const std::size_t n_steps = grid.steps();
    ABMState state;
    for (auto* v : {&state.x, &state.y, &state.z, &state.rhs}) v->reserve(n_steps + 1);
    state.x.push_back(params.x0);
    state.y.push_back(params.y0);
    state.z.push_back(params.z0);
    state.rhs.push_back(abm_rhs(params, forcing(grid.time(0)), params.x0, params.z0));

    for (std::size_t n = 0; n < n_steps; ++n) {
        const double t_next = grid.time(n + 1);
        const auto weights = abm_step_weights(n, abm_orders(order, t_next));
        const ABMTriple predicted = abm_predictor(state, weights, params, grid, n);
        const double f_next = forcing(t_next);
        const ABMTriple next = abm_corrector(state, predicted, weights, params, grid, n, f_next);
        const double rhs_next = abm_rhs(params, f_next, next.x, next.z);
        if (!std::isfinite(rhs_next)) throw SolverAbort("abm", n + 1);
        state.x.push_back(next.x);
        state.y.push_back(next.y);
        state.z.push_back(next.z);
        state.rhs.push_back(rhs_next);
    }

    Trajectory out;
    out.scheme = Scheme::Abm;
    out.t.resize(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) out.t[k] = grid.time(k);
    out.x = std::move(state.x);
    out.y = std::move(state.y);
    out.aux = std::move(state.z);
    return out;
}

}  // namespace fduffing
