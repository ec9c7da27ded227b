#include "fduffing/gl_efds.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "fduffing/errors.hpp"

namespace fduffing {

GLCoefficients gl_coefficients(double order, std::size_t count) {
    GLCoefficients coeffs{order, {}};
    coeffs.c.reserve(count);
    extend_gl_coefficients(coeffs, count);
    return coeffs;
}

void extend_gl_coefficients(GLCoefficients& coeffs, std::size_t count) {
    auto& c = coeffs.c;
    if (c.empty() && count > 0) c.push_back(1.0);
    while (c.size() < count) {
        const auto j = static_cast<double>(c.size());
        c.push_back((1.0 - (1.0 + coeffs.order) / j) * c.back());
    }
}

double gl_derivative_value(std::span<const double> history, const GLCoefficients& coeffs,
                           double h) {
    if (coeffs.c.size() < history.size()) {
        throw std::invalid_argument("gl_derivative_value: fewer coefficients than history values");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < history.size(); ++j) {
        sum += coeffs.c[j] * history[j];
    }
    return std::pow(h, -coeffs.order) * sum;
}

Trajectory efds_solve(const OscillatorParams& params, const OrderFunction& order,
                      const ForcingSpec& forcing, const GridSpec& grid) {
    params.validate();
    order.validate(grid);

    const std::size_t n_steps = grid.steps();
    const double h = grid.step();

    Trajectory out;
    out.scheme = Scheme::Efds;
    out.t.resize(n_steps + 1);
    out.x.resize(n_steps + 1);
    out.y.resize(n_steps + 1);
    out.aux.resize(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) out.t[k] = grid.time(k);
    out.x[0] = params.x0;
    out.y[0] = params.y0;
    out.aux[0] = 0.0;

    // History newest first: reversed[i] = x_{k-i}. Kept as a growing buffer
    // indexed from the back so each step appends one value.
    std::vector<double> reversed;
    reversed.reserve(n_steps);

    const bool constant_order = order.is_constant();
    GLCoefficients coeffs{order(0.0), {}};

    for (std::size_t k = 1; k <= n_steps; ++k) {
        const double x_prev = out.x[k - 1];
        const double y_prev = out.y[k - 1];
        const double x_k = x_prev + h * y_prev;

        const double q_k = order(out.t[k]);
        if (constant_order) {
            extend_gl_coefficients(coeffs, k);
        } else {
            coeffs = gl_coefficients(q_k, k);
        }

        reversed.push_back(x_k);
        // Sum over c_i x_{k-i}, i = 0..k-1; x_{k-i} lives at reversed[k-1-i].
        double sum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            sum += coeffs.c[i] * reversed[k - 1 - i];
        }
        const double w_k = std::pow(h, -q_k) * sum;

        const double y_k =
            y_prev + h * (-params.omega0_sq * x_prev - params.b * x_prev * x_prev * x_prev +
                          forcing(out.t[k - 1]) - params.lambda * w_k);

        if (!std::isfinite(x_k) || !std::isfinite(y_k) || !std::isfinite(w_k)) {
            throw SolverAbort("efds", k);
        }
        out.x[k] = x_k;
        out.y[k] = y_k;
        out.aux[k] = w_k;
    }
    return out;
}

}  // namespace fduffing
