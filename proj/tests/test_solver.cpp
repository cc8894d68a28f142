#include <doctest.h>

#include "support.hpp"

#include "kadv/solver.hpp"
#include "kadv/stepper.hpp"

#include <random>
#include <sstream>

using namespace kadv;

namespace {

/// Random diagonally dominant system on a 1D grid with a known solution.
StencilSystem random_system(int m, unsigned seed, std::vector<double>& solution) {
    const Grid g = make_grid(0.0, 1.0, m, 1);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    StencilSystem sys(g);
    for (auto& row : sys.rows) {
        double off = 0.0;
        for (int o : {-2, -1, 1, 2}) {
            row.implicit_part.at(o, 0) = coef(rng);
            off += std::abs(row.implicit_part.at(o, 0));
        }
        row.implicit_part.at(0, 0) = off + 0.5 + std::abs(coef(rng)) - 1.0;
    }
    solution.resize(g.size());
    for (double& x : solution) x = coef(rng);
    for (int i = 0; i <= m; ++i) {
        double ax = sys.rows[i].diagonal() * solution[i];
        for (int o : {-2, -1, 1, 2}) {
            if (i + o >= 0 && i + o <= m) ax += sys.rows[i].implicit_part.at(o, 0) * solution[i + o];
        }
        sys.rhs[i] = ax;
    }
    return sys;
}

} // namespace

TEST_CASE("identity system") {
    StencilSystem sys(make_grid(0.0, 1.0, 6, 2));
    for (std::size_t p = 0; p < sys.size(); ++p) sys.rhs[p] = 0.5 * p;
    const auto x = direct_solve(sys);
    CHECK(test::max_difference(x, sys.rhs) == 0.0);
    std::vector<double> it(sys.size(), 3.0);
    const auto rep = fast_sweeping_solve(sys, it);
    CHECK(rep.converged);
    CHECK(test::max_difference(it, sys.rhs) == 0.0);
}

TEST_CASE("direct solve of a random diagonally dominant system") {
    std::vector<double> truth;
    const auto sys = random_system(19, 1, truth);
    REQUIRE(sys.size() == 20);
    const auto x = direct_solve(sys);
    CHECK(sys.residual(x) <= 1e-12);
    CHECK(test::max_difference(x, truth) <= 1e-12);
}

TEST_CASE("Gauss-Seidel converges on diagonally dominant systems") {
    std::vector<double> truth;
    const auto sys = random_system(30, 2, truth);
    std::vector<double> x(sys.size(), 0.0);
    const auto rep = fast_sweeping_solve(sys, x, {200, 1e-13});
    CHECK(rep.converged);
    CHECK(rep.finite);
    CHECK(test::max_difference(x, truth) <= 1e-11);
    CHECK(rep.passes == static_cast<int>(rep.pass_residuals.size()));
    CHECK(rep.sweeps_used == (rep.passes + 1) / 2);
}

TEST_CASE("sweep budget caps the passes") {
    std::vector<double> truth;
    const auto sys = random_system(30, 3, truth);
    std::vector<double> x(sys.size(), 0.0);
    const auto rep = fast_sweeping_solve(sys, x, {1, 1e-300});
    CHECK(rep.passes == 2);
    CHECK(rep.sweeps_used == 1);
    CHECK_FALSE(rep.converged);
}

TEST_CASE("orderings") {
    CHECK(sweep_orderings(1).size() == 2);
    const auto o = sweep_orderings(2);
    REQUIRE(o.size() == 4);
    CHECK((o[0].i_ascending && o[0].j_ascending));
    CHECK((!o[1].i_ascending && o[1].j_ascending));
    CHECK((o[2].i_ascending && !o[2].j_ascending));
    CHECK((!o[3].i_ascending && !o[3].j_ascending));
}

TEST_CASE("solver errors") {
    StencilSystem sys(make_grid(0.0, 1.0, 4, 1));
    sys.rows[2].implicit_part.at(0, 0) = -1.0;
    std::vector<double> x(sys.size(), 1.0);
    CHECK_THROWS_AS(gauss_seidel_pass(sys, x, {}), std::domain_error);
    CHECK_THROWS_AS(direct_solve(sys), std::runtime_error);

    StencilSystem big(make_grid(0.0, 1.0, 120, 2));
    CHECK_THROWS_AS(direct_solve(big), std::length_error);
    CHECK_NOTHROW(direct_solve(big, 20000));

    std::vector<double> wrong(3, 0.0);
    CHECK_THROWS_AS(gauss_seidel_pass(sys, wrong, {}), std::invalid_argument);
}

TEST_CASE("non-finite iterates are reported") {
    StencilSystem sys(make_grid(0.0, 1.0, 4, 1));
    sys.rhs[1] = INFINITY;
    std::vector<double> x(sys.size(), 0.0);
    const auto rep = fast_sweeping_solve(sys, x);
    CHECK_FALSE(rep.finite);
    CHECK_FALSE(rep.converged);
}

TEST_CASE("fast sweeping matches the direct solve on a rotation step") {
    const auto setup = rotation_setup(make_profile("dist_euclid"), 20, 50);
    for (const auto& scheme : table_schemes()) {
        double worst = 0.0;
        run_benchmark(setup, scheme, {}, [&](int, const StencilSystem& sys, std::span<const double> x) {
            worst = std::max(worst, test::max_difference(x, direct_solve(sys)));
        });
        CAPTURE(scheme.label());
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("residual does not grow across passes on a benchmark system") {
    const auto setup = rotation_setup(make_profile("cubic"), 20, 50);
    const auto sys = assemble(table_schemes()[2], setup.initial,
                              courant_numbers(setup.problem.velocity, setup.problem.tau),
                              scheme_kappa(table_schemes()[2],
                                           courant_numbers(setup.problem.velocity, setup.problem.tau)),
                              setup.problem.boundary, 0.0, setup.problem.tau);
    std::vector<double> x(setup.initial.values().begin(), setup.initial.values().end());
    const auto rep = fast_sweeping_solve(sys, x, {3, 0.0});
    for (std::size_t k = 1; k < rep.pass_residuals.size(); ++k) {
        CHECK(rep.pass_residuals[k] <= rep.pass_residuals[k - 1] * (1 + 1e-12) + 1e-15);
    }
}

TEST_CASE("stencil csv dump") {
    StencilSystem sys(make_grid(0.0, 1.0, 4, 1));
    sys.rows[2].implicit_part.at(-1, 0) = 0.5;
    sys.rows[2].explicit_part.at(1, 0) = -0.25;
    sys.rhs[2] = 3.0;
    std::ostringstream out;
    write_stencil_csv(out, sys);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    CHECK(header == "i,alpha[-2],alpha[-1],alpha[0],alpha[1],alpha[2],beta[-2],beta[-1],beta[0],beta[1],beta[2],rhs");
    std::getline(in, row);
    std::getline(in, row);
    std::getline(in, row);
    CHECK(row == "2,0,0.5,0,0,0,0,0,0,-0.25,0,3");

    std::ostringstream two;
    write_stencil_csv(two, StencilSystem(make_grid(0.0, 1.0, 4, 2)));
    CHECK(two.str().find("alpha(1;1)") != std::string::npos);
}
