#pragma once

// Fractional Adams-Bashforth-Moulton predictor-corrector for the
// three-equation form of the oscillator:
//
//   D^{q1} x = y,                               q1 = 1
//   D^{q2} y = z,                               q2 = 1 - q(t)
//   D^{q3} z = f - lambda z - omega0^2 x - b x^3, q3 = q(t)
//
// Each step evaluates the three orders at t_{n+1}, runs one predictor and
// one corrector; there is no corrector iteration.

#include <array>
#include <cstddef>
#include <vector>

#include "fduffing/model.hpp"

namespace fduffing {

/// Corrector (rho, length n+2) and predictor (theta, length n+1) weights for
/// step n -> n+1 at order q.
struct ABMWeights {
    std::size_t n = 0;
    double order = 0.0;
    std::vector<double> rho;
    std::vector<double> theta;
};

/// Requires 0 < q <= 1; throws std::invalid_argument otherwise.
ABMWeights abm_weights(std::size_t n, double q);

/// Corrected values at nodes 0..n plus the cached right-hand side
/// f(t_j) - lambda z_j - omega0^2 x_j - b x_j^3.
struct ABMState {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> z;
    std::vector<double> rhs;

    std::size_t size() const noexcept { return x.size(); }
};

double abm_rhs(const OscillatorParams& params, double f, double x, double z);

/// Orders (q1, q2, q3) at time t.
std::array<double, 3> abm_orders(const OrderFunction& order, double t);

struct ABMTriple {
    double x;
    double y;
    double z;
};

/// Weights for the three equations at one step, in equation order.
using ABMStepWeights = std::array<ABMWeights, 3>;

ABMStepWeights abm_step_weights(std::size_t n, const std::array<double, 3>& orders);

/// Predictor for node n+1 from nodes 0..n. `state` must hold n+1 nodes.
ABMTriple abm_predictor(const ABMState& state, const ABMStepWeights& weights,
                        const OscillatorParams& params, const GridSpec& grid, std::size_t n);

/// Single corrector application for node n+1. `f_next` is f(t_{n+1}).
/// Throws SolverAbort if the result is not finite.
ABMTriple abm_corrector(const ABMState& state, const ABMTriple& predicted,
                        const ABMStepWeights& weights, const OscillatorParams& params,
                        const GridSpec& grid, std::size_t n, double f_next);

/// Full solve; Trajectory::aux holds z.
Trajectory abm_solve(const OscillatorParams& params, const OrderFunction& order,
                     const ForcingSpec& forcing, const GridSpec& grid);

}  // namespace fduffing
