#include "fduffing/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fduffing/errors.hpp"
#include "fduffing/verification.hpp"

namespace fduffing {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void OscillatorParams::validate() const {
    const std::pair<const char*, double> fields[] = {
        {"lambda", lambda}, {"omega0_sq", omega0_sq}, {"b", b},   {"delta", delta},
        {"omega", omega},   {"x0", x0},               {"y0", y0}, {"z0", z0},
    };
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value)) {
            throw ConfigError(std::string("parameter ") + name + " is not finite");
        }
    }
    if (omega0_sq < 0.0) {
        throw ConfigError("parameter omega0_sq must be >= 0, got " + fmt_double(omega0_sq));
    }
}

GridSpec::GridSpec(double horizon, std::size_t steps) : horizon_(horizon), steps_(steps) {
    if (!(std::isfinite(horizon) && horizon > 0.0)) {
        throw ConfigError("grid horizon T must be finite and positive, got " + fmt_double(horizon));
    }
    if (steps < 1) {
        throw ConfigError("grid needs at least one step");
    }
    step_ = horizon / static_cast<double>(steps);
}

double GridSpec::time(std::size_t k) const noexcept {
    if (k == steps_) return horizon_;
    return static_cast<double>(k) * step_;
}

OrderFunction OrderFunction::constant(double value) { return OrderFunction(Constant{value}); }

OrderFunction OrderFunction::linear(double intercept, double slope) {
    return OrderFunction(Linear{intercept, slope});
}

OrderFunction OrderFunction::tabulated(std::vector<double> nodes, std::vector<double> values) {
    if (nodes.empty() || nodes.size() != values.size()) {
        throw ConfigError("tabulated order needs equally many nodes and values (at least one)");
    }
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i] > nodes[i - 1])) {
            throw ConfigError("tabulated order nodes must be strictly increasing");
        }
    }
    return OrderFunction(Tabulated{std::move(nodes), std::move(values)});
}

double OrderFunction::operator()(double t) const {
    return std::visit(
        overloaded{
            [](const Constant& c) { return c.value; },
            [t](const Linear& l) { return l.intercept + l.slope * t; },
            [t](const Tabulated& tab) {
                const auto& xs = tab.nodes;
                if (t <= xs.front()) return tab.values.front();
                if (t >= xs.back()) return tab.values.back();
                const auto hi = static_cast<std::size_t>(
                    std::upper_bound(xs.begin(), xs.end(), t) - xs.begin());
                const std::size_t lo = hi - 1;
                const double w = (t - xs[lo]) / (xs[hi] - xs[lo]);
                return tab.values[lo] + w * (tab.values[hi] - tab.values[lo]);
            },
        },
        kind_);
}

double OrderFunction::eval(double t) const {
    const double q = (*this)(t);
    if (!(q > 0.0 && q < 1.0)) {
        throw ConfigError("order q(t) must lie in (0, 1): q(" + fmt_double(t) +
                          ") = " + fmt_double(q));
    }
    return q;
}

void OrderFunction::validate(const GridSpec& grid) const {
    for (std::size_t k = 0; k < grid.nodes(); ++k) {
        eval(grid.time(k));
    }
}

std::string OrderFunction::describe() const {
    return std::visit(
        overloaded{
            [](const Constant& c) { return "const:" + fmt_double(c.value); },
            [](const Linear& l) {
                return "linear:" + fmt_double(l.intercept) + ":" + fmt_double(l.slope);
            },
            [](const Tabulated& tab) {
                return "table(" + std::to_string(tab.nodes.size()) + " nodes)";
            },
        },
        kind_);
}

double ForcingSpec::operator()(double t) const {
    return std::visit(
        overloaded{
            [](const None&) { return 0.0; },
            [t](const Harmonic& h) { return h.delta * std::cos(h.omega * t); },
            [t](const Manufactured& m) { return manufactured_forcing(t, m.lambda, m.order); },
        },
        kind_);
}

const char* scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::Efds: return "efds";
        case Scheme::Abm: return "abm";
    }
    return "unknown";
}

double eval_order(const OrderFunction& order, double t) { return order.eval(t); }

double eval_forcing(const ForcingSpec& forcing, double t) { return forcing(t); }

}  // namespace fduffing
