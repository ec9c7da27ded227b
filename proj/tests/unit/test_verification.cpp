#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fduffing/errors.hpp"
#include "fduffing/gl_efds.hpp"
#include "fduffing/verification.hpp"

using namespace fduffing;

TEST_CASE("manufactured forcing: simple values") {
    const auto half = OrderFunction::constant(0.5);
    CHECK(manufactured_forcing(0.0, 0.1, half) == 0.0);
    CHECK(manufactured_forcing(0.0, 0.1, manufactured_default_order()) == 0.0);
    CHECK(manufactured_forcing(1.0, 0.0, half) == 8.0);
    CHECK(manufactured_forcing(1.0, 0.0, manufactured_default_order()) == 8.0);

    // Gamma(3.5) from an mpmath evaluation.
    const double gamma_35 = 3.32335097044784255118406403126;
    CHECK(manufactured_forcing(1.0, 0.1, half) ==
          doctest::Approx(8.0 + 0.6 / gamma_35).epsilon(1e-14));

    CHECK_THROWS(manufactured_forcing(-0.1, 0.1, half));
}

TEST_CASE("manufactured forcing: closed form and finite-difference paths agree") {
    for (double q : {0.1, 0.3, 0.5, 0.8, 0.95}) {
        const auto order = OrderFunction::constant(q);
        for (int i = 0; i < 100; ++i) {
            const double t = 0.01 + (1.0 - 0.01) * i / 99.0;
            const double closed = manufactured_forcing(t, 0.1, order);
            const double fd = manufactured_forcing_fd(t, 0.1, order);
            CAPTURE(q);
            CAPTURE(t);
            CHECK(std::abs(closed - fd) <= 1e-5 * std::abs(closed));
            // The fractional part on its own also agrees.
            const double poly = std::pow(t, 9) + std::pow(t, 3) + 6.0 * t;
            CHECK(std::abs((closed - poly) - (fd - poly)) <= 1e-5 * std::abs(closed - poly));
        }
    }
}

TEST_CASE("manufactured forcing as a ForcingSpec") {
    const auto order = manufactured_default_order();
    const auto f = ForcingSpec::manufactured(0.1, order);
    CHECK(f(0.4) == manufactured_forcing(0.4, 0.1, order));
    // Small t takes the one-sided difference.
    CHECK(std::isfinite(f(1e-7)));
    CHECK(f(1e-7) >= 0.0);
}

TEST_CASE("exact cubic") {
    CHECK(exact_cubic(0.0) == 0.0);
    CHECK(exact_cubic(1.0) == 1.0);
    CHECK(exact_cubic(0.5) == 0.125);
}

namespace {

Trajectory cubic_trajectory(std::size_t n) {
    Trajectory tr;
    for (std::size_t k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        tr.t.push_back(t);
        tr.x.push_back(exact_cubic(t));
        tr.y.push_back(0.0);
        tr.aux.push_back(0.0);
    }
    return tr;
}

}  // namespace

TEST_CASE("max error") {
    auto tr = cubic_trajectory(10);
    CHECK(max_error(tr, exact_cubic) == 0.0);
    tr.x[4] += 1e-3;
    CHECK(max_error(tr, exact_cubic) == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK_THROWS(max_error(Trajectory{}, exact_cubic));
}

TEST_CASE("accuracy sequence is the ratio of logs") {
    const double e1[] = {std::exp(-1.0), std::exp(-2.0)};
    const auto p = accuracy_sequence(e1);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-15));

    const double efds_pair[] = {0.011403981, 0.008901704};
    CHECK(accuracy_sequence(efds_pair)[0] == doctest::Approx(0.947533812).epsilon(1e-8));
    const double abm_pair[] = {0.006415779, 0.001892361};
    CHECK(accuracy_sequence(abm_pair)[0] == doctest::Approx(0.805271339).epsilon(1e-8));
}

TEST_CASE("accuracy sequence rejects values outside (0, 1)") {
    const double zero[] = {0.1, 0.0};
    const double one[] = {1.0, 0.5};
    const double negative[] = {-0.1, 0.01};
    CHECK_THROWS_AS(accuracy_sequence(zero), MetricDomainError);
    CHECK_THROWS_AS(accuracy_sequence(one), MetricDomainError);
    CHECK_THROWS_AS(accuracy_sequence(negative), MetricDomainError);
}

TEST_CASE("classical order") {
    const double e[] = {0.4, 0.1, 0.05};
    const auto p = classical_order_sequence(e);
    CHECK(p[0] == doctest::Approx(2.0));
    CHECK(p[1] == doctest::Approx(1.0));
    const double bad[] = {0.1, 0.0};
    CHECK_THROWS_AS(classical_order_sequence(bad), MetricDomainError);
}

namespace {

// x_k = sin(t_k) + C h t_k: error C h t against sin, so Runge differences are C h T / 2.
SchemeRunner first_order_stub(double horizon, double c) {
    return [horizon, c](std::size_t n) {
        const GridSpec grid(horizon, n);
        Trajectory tr;
        for (std::size_t k = 0; k <= n; ++k) {
            const double t = grid.time(k);
            tr.t.push_back(t);
            tr.x.push_back(std::sin(t) + c * grid.step() * t);
            tr.y.push_back(0.0);
            tr.aux.push_back(0.0);
        }
        return tr;
    };
}

SchemeRunner exact_stub() {
    return [](std::size_t n) { return cubic_trajectory(n); };
}

}  // namespace

TEST_CASE("Runge errors of a first-order stub halve per level") {
    const std::size_t levels[] = {10, 20, 40, 80, 160, 320};
    const auto xi = runge_errors(first_order_stub(2.0, 0.7), levels);
    REQUIRE(xi.size() == 6);
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const double h = 2.0 / static_cast<double>(levels[i]);
        CHECK(xi[i] == doctest::Approx(0.7 * h * 2.0 / 2.0).epsilon(1e-12));
    }
    for (std::size_t i = 0; i + 1 < xi.size(); ++i) {
        CHECK(std::abs(xi[i] / xi[i + 1] - 2.0) <= 2.0 * 1e-12);
    }
}

TEST_CASE("Runge errors of an exact scheme vanish") {
    const std::size_t levels[] = {10, 20, 40};
    for (double xi : runge_errors(exact_stub(), levels)) CHECK(xi == 0.0);
}

TEST_CASE("Runge errors validate levels and annotate failures") {
    const std::size_t bad_levels[] = {10, 30};
    CHECK_THROWS_AS(runge_errors(exact_stub(), bad_levels), std::invalid_argument);

    const SchemeRunner failing = [](std::size_t n) -> Trajectory {
        if (n >= 40) throw SolverAbort("stub", 3);
        return cubic_trajectory(n);
    };
    const std::size_t levels[] = {10, 20};
    try {
        runge_errors(failing, levels);
        FAIL("expected an error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("N=40") != std::string::npos);
    }
}

TEST_CASE("convergence study with an exact stub surfaces per-cell domain errors") {
    const auto report = convergence_study(exact_stub(), exact_stub(), exact_cubic, 1.0, 10, 2,
                                          ErrorMode::ExactSolution);
    REQUIRE(report.rows.size() == 2);
    for (const auto& row : report.rows) {
        CHECK(row.xi_efds == 0.0);
        CHECK(row.xi_abm == 0.0);
        CHECK_FALSE(row.p_efds.has_value());
        CHECK_FALSE(row.p_abm.has_value());
    }
    CHECK(report.warnings.size() >= 2);
}

TEST_CASE("convergence study layout") {
    const auto report = convergence_study(first_order_stub(1.0, 0.5), first_order_stub(1.0, 0.2),
                                          nullptr, 1.0, 10, 4, ErrorMode::RungeRule);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.mode == ErrorMode::RungeRule);
    CHECK_FALSE(report.rows[0].p_efds.has_value());
    CHECK_FALSE(report.rows[0].p_abm.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(report.rows[i].n == (10u << i));
        CHECK(report.rows[i].h == doctest::Approx(0.1 / (1 << i)));
        if (i > 0) {
            CHECK(report.rows[i].n == 2 * report.rows[i - 1].n);
            CHECK(report.rows[i].p_efds.has_value());
            CHECK(*report.rows[i].p2_efds == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(*report.rows[i].p2_abm == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    CHECK(report.warnings.empty());

    CHECK_THROWS(convergence_study(exact_stub(), exact_stub(), exact_cubic, 1.0, 10, 1,
                                   ErrorMode::ExactSolution));
}

TEST_CASE("convergence study marks failed cells and keeps going") {
    const SchemeRunner failing = [](std::size_t n) -> Trajectory {
        if (n == 20) throw SolverAbort("stub", 5);
        return first_order_stub(1.0, 0.5)(n);
    };
    const auto report = convergence_study(failing, first_order_stub(1.0, 0.5), nullptr, 1.0, 10, 3,
                                          ErrorMode::RungeRule);
    // Level 10 needs N=20 and level 20 is N=20 itself.
    CHECK_FALSE(report.rows[0].xi_efds.has_value());
    CHECK_FALSE(report.rows[1].xi_efds.has_value());
    CHECK(report.rows[2].xi_efds.has_value());
    CHECK(report.rows[2].xi_abm.has_value());
    CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("manufactured problem configurations") {
    const auto paper = manufactured_problem(IcMode::Paper, manufactured_default_order());
    CHECK(paper.params.x0 == 0.01);
    CHECK(paper.params.y0 == 0.03);
    CHECK(paper.params.lambda == 0.1);
    CHECK(paper.horizon == 1.0);
    const auto consistent = manufactured_problem(IcMode::Consistent, manufactured_default_order());
    CHECK(consistent.params.x0 == 0.0);
    CHECK(consistent.params.y0 == 0.0);
    CHECK(manufactured_default_order()(1.0) == doctest::Approx(0.3));
}

TEST_CASE("manufactured problem with lambda = 0 and Euler: error shrinks linearly") {
    // Sanity check of the forcing: lambda = 0 reduces the scheme to explicit Euler on
    // x'' + x + x^3 = t^9 + t^3 + 6t, whose first-order error halves per doubling.
    auto problem = manufactured_problem(IcMode::Consistent, OrderFunction::constant(0.5));
    problem.params.lambda = 0.0;
    problem.forcing = ForcingSpec::manufactured(0.0, problem.order);
    double previous = 0.0;
    for (std::size_t n : {200u, 400u, 800u}) {
        const auto tr = efds_solve(problem.params, problem.order, problem.forcing,
                                   GridSpec(problem.horizon, n));
        const double err = max_error(tr, exact_cubic);
        if (previous > 0.0) CHECK(previous / err == doctest::Approx(2.0).epsilon(0.05));
        previous = err;
    }
}
