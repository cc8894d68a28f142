#include <doctest.h>

#include "support.hpp"

#include "kadv/assembly.hpp"
#include "kadv/schemes1d.hpp"
#include "kadv/solver.hpp"
#include "kadv/stepper.hpp"

#include <cmath>
#include <numbers>

using namespace kadv;
using std::numbers::pi;

namespace {

BoundaryData translated(const AnalyticProfile& p, double v) {
    return [u0 = p.u0, v](double x, double y, double t) { return exact_translation(u0, v, 0.0, t, x, y); };
}

} // namespace

TEST_CASE("semi-implicit row for positive velocity") {
    // alpha = C((3-k)/4, (k-2)/2, (1-k)/4) at offsets 0, -1, -2; beta = -C/4 ((1+k), -2k, -(1-k)) at +1, 0, -1
    const double c = 0.7, k = 0.2;
    const auto row = semi_implicit_row(Axis::x, {c, k});
    CHECK(row.implicit_part.at(0, 0) == doctest::Approx(c * (3 - k) / 4));
    CHECK(row.implicit_part.at(-1, 0) == doctest::Approx(c * (k - 2) / 2));
    CHECK(row.implicit_part.at(-2, 0) == doctest::Approx(c * (1 - k) / 4));
    CHECK(row.implicit_part.at(1, 0) == 0.0);
    CHECK(row.explicit_part.at(1, 0) == doctest::Approx(-c * (1 + k) / 4));
    CHECK(row.explicit_part.at(0, 0) == doctest::Approx(c * 2 * k / 4));
    CHECK(row.explicit_part.at(-1, 0) == doctest::Approx(c * (1 - k) / 4));
    CHECK(std::abs(row.implicit_part.sum()) < 1e-15);
    CHECK(std::abs(row.explicit_part.sum()) < 1e-15);
}

TEST_CASE("semi-implicit rows are strictly one-sided in the implicit part") {
    for (double k : {-1.0, -0.3, 0.0, 1.0 / 3.0, 1.0}) {
        for (double c : {0.1, 1.0, 7.5}) {
            const auto pos = semi_implicit_row(Axis::x, {c, k});
            const auto neg = semi_implicit_row(Axis::x, {-c, k});
            for (int o : {1, 2}) {
                CHECK(pos.implicit_part.at(o, 0) == 0.0);
                CHECK(neg.implicit_part.at(-o, 0) == 0.0);
            }
        }
    }
}

TEST_CASE("zero velocity rows vanish") {
    for (double k : {-1.0, 0.0, 1.0}) {
        const StencilRow zero{};
        CHECK(semi_implicit_row(Axis::x, {0.0, k}) == zero);
        CHECK(semi_implicit_b_row(Axis::y, {0.0, k}) == zero);
        CHECK(explicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(0.0, k)) == zero);
        CHECK(implicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(0.0, k)) == zero);
    }
}

TEST_CASE("implicit row at C = 1, kappa = 0") {
    const auto row = implicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(1.0, 0.0));
    CHECK(row.implicit_part.at(-2, 0) == doctest::Approx(0.5));
    CHECK(row.implicit_part.at(-1, 0) == doctest::Approx(-1.5));
    CHECK(row.implicit_part.at(0, 0) == doctest::Approx(0.5));
    CHECK(row.implicit_part.at(1, 0) == doctest::Approx(0.5));
    CHECK(row.explicit_part == Stencil{});
}

TEST_CASE("explicit kappa = 1 is Lax-Wendroff for constant velocity") {
    const double c = 0.6;
    const auto row = explicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(c, 1.0));
    CHECK(row.explicit_part.at(1, 0) == doctest::Approx(-c / 2 + c * c / 2));
    CHECK(row.explicit_part.at(0, 0) == doctest::Approx(-c * c));
    CHECK(row.explicit_part.at(-1, 0) == doctest::Approx(c / 2 + c * c / 2));
    CHECK(row.explicit_part.at(-2, 0) == doctest::Approx(0.0));
}

TEST_CASE("explicit kappa = -1 is Beam-Warming for constant velocity") {
    const double c = 0.4;
    const auto row = explicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(c, -1.0));
    CHECK(row.explicit_part.at(0, 0) == doctest::Approx(-c * (3 - c) / 2));
    CHECK(row.explicit_part.at(-1, 0) == doctest::Approx(c * (2 - c)));
    CHECK(row.explicit_part.at(-2, 0) == doctest::Approx(-c * (1 - c) / 2));
    const auto mirrored = explicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(-c, 1.0));
    CHECK(mirrored.explicit_part.at(2, 0) == doctest::Approx(-c * (1 - c) / 2));
}

TEST_CASE("variant B with kappa = sign(V) mirrors the semi-implicit row") {
    const double c = 0.9;
    const auto a = semi_implicit_row(Axis::x, {c, 1.0});
    const auto b = semi_implicit_b_row(Axis::x, {c, 1.0});
    CHECK(b.implicit_part.at(0, 0) == doctest::Approx(-0.5 * c));
    CHECK(b.implicit_part.at(1, 0) == doctest::Approx(0.5 * c));
    CHECK(b.explicit_part.at(0, 0) == doctest::Approx(-0.5 * c));
    CHECK(b.explicit_part.at(-1, 0) == doctest::Approx(0.5 * c));
    CHECK(a.implicit_part.at(-1, 0) == doctest::Approx(-0.5 * c));
}

TEST_CASE("one ordered pass solves single-signed semi-implicit systems") {
    const Grid g = make_grid(-1.0, 1.0, 40, 1);
    const auto prof = make_profile("sine");
    for (double sign : {1.0, -1.0}) {
        const auto vel = VelocityField::sample(g, [sign](double x, double) {
            return std::pair{sign * (0.5 + 0.4 * std::cos(pi * x)), 0.0};
        });
        const auto cf = courant_numbers(vel, 0.2);
        for (const auto& k : test::table_strategies()) {
            const auto u = benchmark_profile("sine", g);
            const auto sys = semi_implicit_stencil(u, cf, k, translated(prof, 0.0), 0.0, 0.2);
            std::vector<double> x(u.values().begin(), u.values().end());
            gauss_seidel_pass(sys, x, {sign > 0, true});
            const auto exact = direct_solve(sys);
            CHECK(test::max_difference(x, exact) <= 1e-13);
            CHECK(sys.residual(x) <= 1e-13);
        }
    }
}

TEST_CASE("third-order exactness on cubic polynomials") {
    const Grid g = make_grid(-1.0, 1.0, 20, 1);
    const double h = g.spacing();
    const auto cubic = test::polynomial(3, {0.3, 0.0, 0.0, 0.0, -0.7, 0.0, 0.0, 0.2, 0.0, 1.1});
    const auto u0 = sample(g, cubic.u0);

    struct Case {
        SchemeKind kind;
        KappaStrategy::Kind kappa;
        double courant;
    };
    const Case cases[] = {
        {SchemeKind::semi_implicit, KappaStrategy::Kind::third_semi, 0.8},
        {SchemeKind::semi_implicit, KappaStrategy::Kind::third_semi, -2.5},
        {SchemeKind::semi_implicit, KappaStrategy::Kind::third_semi, 6.0},
        {SchemeKind::explicit_kappa, KappaStrategy::Kind::third_explicit, 0.7},
        {SchemeKind::explicit_kappa, KappaStrategy::Kind::third_explicit, -0.4},
        {SchemeKind::implicit_kappa, KappaStrategy::Kind::third_implicit, 0.4},
        {SchemeKind::implicit_kappa, KappaStrategy::Kind::third_implicit, -0.3},
    };
    for (const auto& cs : cases) {
        CAPTURE(cs.courant);
        const double tau = 0.1;
        const double v = cs.courant * h / tau;
        const auto cf = courant_numbers(VelocityField::constant(g, v), tau);
        const SchemeSpec spec{cs.kind, {cs.kappa, 0, 0}, {}, {}};
        const auto sys = assemble(spec, u0, cf, scheme_kappa(spec, cf), translated(cubic, v), 0.0, tau);
        const auto next = cs.kind == SchemeKind::explicit_kappa ? sys.rhs : direct_solve(sys);
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i) {
            worst = std::max(worst, std::abs(next[i] - exact_translation(cubic.u0, v, 0, tau, g.x(i), 0)));
        }
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("second-order convergence with variable velocity") {
    // V = 1 + x/2 moves a point to (x0 + 2) e^{t/2} - 2
    const PlaneFunction u0 = [](double x, double) { return std::sin(pi * x); };
    BoundaryData exact = [u0](double x, double, double t) {
        return u0((x + 2.0) * std::exp(-0.5 * t) - 2.0, 0.0);
    };
    for (const auto& k : test::table_strategies()) {
        std::vector<std::pair<int, double>> table;
        for (int m : {80, 160, 320}) {
            const Grid g = make_grid(-1.0, 1.0, m, 1);
            const int steps = m / 2;
            BenchmarkSetup setup{"variable", {g, VelocityField::sample(g, [](double x, double) {
                                                  return std::pair{1.0 + 0.5 * x, 0.0};
                                              }), exact, 1.0 / steps},
                                 sample(g, u0), steps, exact};
            table.emplace_back(m, run_benchmark(setup, {SchemeKind::semi_implicit, k, {}, {}}).error);
        }
        const auto t = eoc(table);
        CAPTURE(k.label());
        CHECK(t.eoc[0] >= 1.6);
        CHECK(t.eoc[1] >= 1.8);
        CHECK(t.eoc[1] <= 2.2);
        CHECK(t.eoc[1] >= t.eoc[0] - 0.05);
    }
}

TEST_CASE("explicit step entry point") {
    const Grid g = make_grid(0.0, 1.0, 10, 1);
    const auto line = test::polynomial(1, {0.5, 0.0, 2.0});
    const auto cf = courant_numbers(VelocityField::constant(g, 1.0), 0.05);
    const auto next = explicit_kappa_step(sample(g, line.u0), cf, KappaStrategy::k0(), translated(line, 1.0), 0.0, 0.05);
    for (int i = 0; i <= 10; ++i) CHECK(next(i) == doctest::Approx(0.5 + 2.0 * (g.x(i) - 0.05)));
}

TEST_CASE("one-dimensional-only schemes reject 2D grids") {
    const Grid g = make_grid(0.0, 1.0, 8, 2);
    const auto cf = courant_numbers(VelocityField::constant(g, 1.0, 1.0), 0.05);
    const ScalarField u(g);
    BoundaryData zero = [](double, double, double) { return 0.0; };
    CHECK_THROWS_AS(explicit_kappa_step(u, cf, KappaStrategy::k0(), zero, 0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(implicit_kappa_stencil(u, cf, KappaStrategy::k0(), zero, 0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(semi_implicit_variant_b_stencil(u, cf, KappaStrategy::k0(), zero, 0, 0.05),
                    std::invalid_argument);
    CHECK_NOTHROW(semi_implicit_stencil(u, cf, KappaStrategy::k0(), zero, 0, 0.05));
}

TEST_CASE("ghost values enter the right-hand side at the proper time level") {
    // V > 0, kappa = -1: node 1 reaches U_{-1} implicitly; the rhs must carry the t_new value
    const Grid g = make_grid(0.0, 1.0, 8, 1);
    const auto cf = courant_numbers(VelocityField::constant(g, 1.0), 0.125);
    BoundaryData clock = [](double x, double, double t) { return x < 0.0 ? 100.0 * (1.0 + t) : 0.0; };
    const auto sys = semi_implicit_stencil(ScalarField(g), cf, KappaStrategy::constant(-1.0), clock, 0.0, 0.125);
    const double a = sys.rows[1].implicit_part.at(-2, 0);
    CHECK(a != 0.0);
    CHECK(sys.rhs[1] == doctest::Approx(-a * 100.0 * 1.125));
    CHECK(sys.rhs[0] == doctest::Approx(0.0));
}
