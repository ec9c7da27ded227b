#pragma once

// Problem definition for the fractional Duffing oscillator
//
//   x'' + lambda * D^{q(t)} x + omega0^2 * x + b * x^3 = f(t),
//   x(0) = x0, x'(0) = y0,
//
// where D^{q(t)} is a Riemann-Liouville-type derivative of variable order
// 0 < q(t) < 1.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace fduffing {

struct OscillatorParams {
    double lambda = 1.0;     // friction coefficient
    double omega0_sq = 1.0;  // natural frequency squared
    double b = 1.0;          // isochronism (cubic stiffness) coefficient
    double delta = 1.0;      // forcing amplitude
    double omega = 1.0;      // forcing frequency
    double x0 = 0.0;
    double y0 = 0.0;
    double z0 = 0.0;  // initial value of the ABM auxiliary variable

    /// Throws ConfigError unless all fields are finite and omega0_sq >= 0.
    void validate() const;
};

class GridSpec {
public:
    GridSpec(double horizon, std::size_t steps);

    double horizon() const noexcept { return horizon_; }
    std::size_t steps() const noexcept { return steps_; }
    double step() const noexcept { return step_; }
    std::size_t nodes() const noexcept { return steps_ + 1; }

    /// Node t_k; t_N equals the horizon exactly.
    double time(std::size_t k) const noexcept;

private:
    double horizon_;
    std::size_t steps_;
    double step_;
};

/// Variable fractional order q(t).
class OrderFunction {
public:
    struct Constant {
        double value;
    };
    struct Linear {
        double intercept;
        double slope;
    };
    struct Tabulated {
        std::vector<double> nodes;  // strictly increasing
        std::vector<double> values;
    };
    using Kind = std::variant<Constant, Linear, Tabulated>;

    static OrderFunction constant(double value);
    static OrderFunction linear(double intercept, double slope);
    /// Piecewise-linear through (nodes[i], values[i]); held constant outside
    /// the node range. Throws ConfigError on size mismatch or unsorted nodes.
    static OrderFunction tabulated(std::vector<double> nodes, std::vector<double> values);

    /// q(t) without range checking.
    double operator()(double t) const;

    /// q(t), throwing ConfigError naming t and the value if it leaves (0, 1).
    double eval(double t) const;

    /// Checks 0 < q(t_k) < 1 at every node of the grid.
    void validate(const GridSpec& grid) const;

    bool is_constant() const noexcept { return std::holds_alternative<Constant>(kind_); }
    const Kind& kind() const noexcept { return kind_; }

    std::string describe() const;

private:
    explicit OrderFunction(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

/// External action f(t).
class ForcingSpec {
public:
    struct None {};
    struct Harmonic {
        double delta;
        double omega;
    };
    struct Manufactured {
        double lambda;
        OrderFunction order;
    };
    using Kind = std::variant<None, Harmonic, Manufactured>;

    static ForcingSpec none() { return ForcingSpec(None{}); }
    static ForcingSpec harmonic(double delta, double omega) {
        return ForcingSpec(Harmonic{delta, omega});
    }
    /// Forcing for which x(t) = t^3 solves the model with omega0^2 = b = 1.
    static ForcingSpec manufactured(double lambda, OrderFunction order) {
        return ForcingSpec(Manufactured{lambda, std::move(order)});
    }

    double operator()(double t) const;

    const Kind& kind() const noexcept { return kind_; }

private:
    explicit ForcingSpec(Kind kind) : kind_(std::move(kind)) {}
    Kind kind_;
};

enum class Scheme { Efds, Abm };

const char* scheme_name(Scheme scheme);

/// Grid values of a solution. `aux` is the GL memory term w for EFDS and the
/// auxiliary variable z for ABM.
struct Trajectory {
    Scheme scheme = Scheme::Efds;
    std::vector<double> t;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> aux;

    std::size_t size() const noexcept { return t.size(); }
};

/// Free-function forms of the evaluations above.
double eval_order(const OrderFunction& order, double t);
double eval_forcing(const ForcingSpec& forcing, double t);

}  // namespace fduffing
