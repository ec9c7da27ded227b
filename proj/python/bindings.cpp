#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fduffing/abm.hpp"
#include "fduffing/errors.hpp"
#include "fduffing/gl_efds.hpp"
#include "fduffing/special.hpp"
#include "fduffing/verification.hpp"

namespace py = pybind11;
using namespace fduffing;

namespace {

py::dict row_to_dict(const ConvergenceRow& row) {
    py::dict d;
    d["N"] = row.n;
    d["h"] = row.h;
    d["xi_efds"] = row.xi_efds;
    d["p_efds"] = row.p_efds;
    d["xi_abm"] = row.xi_abm;
    d["p_abm"] = row.p_abm;
    d["p2_efds"] = row.p2_efds;
    d["p2_abm"] = row.p2_abm;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fractional Duffing oscillator solvers";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SolverAbort>(m, "SolverAbort", PyExc_ArithmeticError);
    py::register_exception<MetricDomainError>(m, "MetricDomainError", PyExc_ValueError);

    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init<>())
        .def(py::init([](double lambda, double omega0_sq, double b, double delta, double omega,
                         double x0, double y0, double z0) {
                 return OscillatorParams{lambda, omega0_sq, b, delta, omega, x0, y0, z0};
             }),
             py::arg("lambda_") = 1.0, py::arg("omega0_sq") = 1.0, py::arg("b") = 1.0,
             py::arg("delta") = 1.0, py::arg("omega") = 1.0, py::arg("x0") = 0.0,
             py::arg("y0") = 0.0, py::arg("z0") = 0.0)
        .def_readwrite("lambda_", &OscillatorParams::lambda)
        .def_readwrite("omega0_sq", &OscillatorParams::omega0_sq)
        .def_readwrite("b", &OscillatorParams::b)
        .def_readwrite("delta", &OscillatorParams::delta)
        .def_readwrite("omega", &OscillatorParams::omega)
        .def_readwrite("x0", &OscillatorParams::x0)
        .def_readwrite("y0", &OscillatorParams::y0)
        .def_readwrite("z0", &OscillatorParams::z0);

    py::class_<OrderFunction>(m, "OrderFunction")
        .def_static("constant", &OrderFunction::constant, py::arg("value"))
        .def_static("linear", &OrderFunction::linear, py::arg("intercept"), py::arg("slope"))
        .def_static("tabulated", &OrderFunction::tabulated, py::arg("nodes"), py::arg("values"))
        .def("__call__", &OrderFunction::eval, py::arg("t"))
        .def("__repr__", &OrderFunction::describe);

    py::class_<ForcingSpec>(m, "ForcingSpec")
        .def_static("none", &ForcingSpec::none)
        .def_static("harmonic", &ForcingSpec::harmonic, py::arg("delta"), py::arg("omega"))
        .def_static("manufactured", &ForcingSpec::manufactured, py::arg("lambda_"),
                    py::arg("order"))
        .def("__call__", &ForcingSpec::operator(), py::arg("t"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<double, std::size_t>(), py::arg("horizon"), py::arg("steps"))
        .def_property_readonly("horizon", &GridSpec::horizon)
        .def_property_readonly("steps", &GridSpec::steps)
        .def_property_readonly("step", &GridSpec::step)
        .def("time", &GridSpec::time, py::arg("k"));

    py::class_<Trajectory>(m, "Trajectory")
        .def_property_readonly("scheme", [](const Trajectory& t) { return scheme_name(t.scheme); })
        .def_readonly("t", &Trajectory::t)
        .def_readonly("x", &Trajectory::x)
        .def_readonly("y", &Trajectory::y)
        .def_readonly("aux", &Trajectory::aux)
        .def("__len__", &Trajectory::size);

    m.def("gamma", [](double x) { return fduffing::gamma_function(x); }, py::arg("x"));
    m.def(
        "gl_coefficients",
        [](double q, std::size_t count) { return gl_coefficients(q, count).c; }, py::arg("q"),
        py::arg("count"));
    m.def(
        "abm_weights",
        [](std::size_t n, double q) {
            auto w = abm_weights(n, q);
            return py::make_tuple(w.rho, w.theta);
        },
        py::arg("n"), py::arg("q"), "Returns (rho, theta).");

    m.def("efds_solve", &efds_solve, py::arg("params"), py::arg("order"), py::arg("forcing"),
          py::arg("grid"), py::call_guard<py::gil_scoped_release>());
    m.def("abm_solve", &abm_solve, py::arg("params"), py::arg("order"), py::arg("forcing"),
          py::arg("grid"), py::call_guard<py::gil_scoped_release>());

    m.def("manufactured_forcing", &manufactured_forcing, py::arg("t"), py::arg("lambda_"),
          py::arg("order"));
    m.def("exact_cubic", &exact_cubic, py::arg("t"));
    m.def("max_error", &max_error, py::arg("trajectory"), py::arg("reference"));
    m.def(
        "accuracy_sequence", [](std::vector<double> e) { return accuracy_sequence(e); },
        py::arg("errors"));
    m.def(
        "classical_order_sequence",
        [](std::vector<double> e) { return classical_order_sequence(e); }, py::arg("errors"));

    py::class_<Problem>(m, "Problem")
        .def_readwrite("params", &Problem::params)
        .def_readwrite("order", &Problem::order)
        .def_readwrite("forcing", &Problem::forcing)
        .def_readwrite("horizon", &Problem::horizon);

    m.def(
        "manufactured_problem",
        [](const std::string& ic_mode, std::optional<OrderFunction> order) {
            if (ic_mode != "paper" && ic_mode != "consistent") {
                throw ConfigError("ic_mode must be 'paper' or 'consistent'");
            }
            return manufactured_problem(ic_mode == "paper" ? IcMode::Paper : IcMode::Consistent,
                                        order ? *order : manufactured_default_order());
        },
        py::arg("ic_mode") = "paper", py::arg("order") = py::none());
    m.def("limit_cycle_problem", &limit_cycle_problem, py::arg("horizon") = 100.0);

    m.def(
        "convergence_study",
        [](const Problem& problem, std::size_t n_start, std::size_t levels,
           const std::string& mode) {
            if (mode != "exact" && mode != "runge") {
                throw ConfigError("mode must be 'exact' or 'runge'");
            }
            ConvergenceReport report;
            {
                py::gil_scoped_release release;
                report = convergence_study(
                    problem, n_start, levels,
                    mode == "exact" ? ErrorMode::ExactSolution : ErrorMode::RungeRule);
            }
            py::list rows;
            for (const auto& row : report.rows) rows.append(row_to_dict(row));
            return py::make_tuple(rows, report.warnings);
        },
        py::arg("problem"), py::arg("n_start") = 10, py::arg("levels") = 8,
        py::arg("mode") = "exact");
}
