#pragma once

// Grunwald-Letnikov approximation of the variable-order derivative and the
// explicit finite-difference scheme (EFDS) built on it.

#include <cstddef>
#include <span>
#include <vector>

#include "fduffing/model.hpp"

namespace fduffing {

/// c_0 = 1, c_j = (1 - (1 + q) / j) * c_{j-1}.
struct GLCoefficients {
    double order = 0.0;
    std::vector<double> c;
};

GLCoefficients gl_coefficients(double order, std::size_t count);

/// Appends c_j for j = c.size() .. count-1 using the same recurrence.
void extend_gl_coefficients(GLCoefficients& coeffs, std::size_t count);

/// h^{-q} * sum_j c_j * history[j]; `history` is newest first (x_k, x_{k-1}, ..., x_1).
double gl_derivative_value(std::span<const double> history, const GLCoefficients& coeffs, double h);

/// Explicit scheme:
///   x_k = x_{k-1} + h y_{k-1}
///   y_k = y_{k-1} + h (-omega0^2 x_{k-1} - b x_{k-1}^3 + f(t_{k-1}) - lambda w_k)
/// with w_k the GL derivative over x_k, ..., x_1 at order q(t_k).
/// Throws ConfigError for invalid inputs and SolverAbort on a non-finite state.
Trajectory efds_solve(const OscillatorParams& params, const OrderFunction& order,
                      const ForcingSpec& forcing, const GridSpec& grid);

}  // namespace fduffing
