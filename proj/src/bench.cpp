#include "kadv/bench.hpp"

#include "kadv/csv.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace kadv {

BenchmarkSetup translation_setup(const AnalyticProfile& profile, int m, int steps, double v,
                                 double w, double t_end, int dims, double x_min, double x_max) {
    const Grid g = make_grid(x_min, x_max, m, dims);
    const auto ts = make_time_stepping(t_end, steps);
    auto exact = [u0 = profile.u0, v, w](double x, double y, double t) {
        return exact_translation(u0, v, w, t, x, y);
    };
    return {"translation",
            Problem{g, VelocityField::constant(g, v, w), exact, ts.tau},
            sample(g, profile.u0), steps, exact};
}

BenchmarkSetup rotation_setup(const AnalyticProfile& profile, int m, int steps) {
    const Grid g = make_grid(-1.0, 1.0, m, 2);
    const auto ts = make_time_stepping(1.0, steps);
    auto exact = [u0 = profile.u0](double x, double y, double t) {
        return exact_rotation(u0, t, x, y);
    };
    return {"rotation", Problem{g, VelocityField::sample(g, rotation_velocity), exact, ts.tau},
            sample(g, profile.u0), steps, exact};
}

BenchmarkSetup vortex_setup(int m, int steps, double t_end) {
    const Grid g = make_grid(-1.0, 1.0, m, 2);
    const auto ts = make_time_stepping(t_end, steps);
    const AnalyticProfile circle = make_profile("vortex_circle");
    auto fixed = [u0 = circle.u0](double x, double y, double) { return u0(x, y); };
    return {"vortex", Problem{g, VelocityField::sample(g, vortex_velocity), fixed, ts.tau},
            sample(g, circle.u0), steps, {}};
}

ErrorReport run_benchmark(const BenchmarkSetup& setup, const SchemeSpec& scheme,
                          const SolverOptions& solver, const SystemObserver& on_system) {
    const Grid& g = setup.problem.grid;
    const double cell = g.dims() == 2 ? g.spacing() * g.spacing() : g.spacing();
    const int j_first = g.dims() == 2 ? 1 : 0;

    ErrorReport rep;
    rep.suite = setup.suite;
    rep.scheme = scheme.scheme_name();
    rep.kappa = scheme.kappa.label();
    rep.m = g.intervals();
    rep.n = setup.steps;
    rep.min_value = std::numeric_limits<double>::infinity();

    auto observe = [&](int step, const ScalarField& u) {
        rep.min_value = std::min(rep.min_value, u.min());
        if (!setup.exact) return;
        const double t = setup.problem.t0 + step * setup.problem.tau;
        double sum = 0.0;
        for (int j = j_first; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                const double diff = std::abs(u(i, j) - setup.exact(g.x(i), g.y(j), t));
                rep.max_deviation = std::max(rep.max_deviation, diff);
                if (i >= 1) sum += diff;
            }
        }
        rep.error = std::max(rep.error, cell * sum);
    };

    const auto start = std::chrono::steady_clock::now();
    AdvanceResult res =
        advance(setup.problem, setup.initial, scheme, solver, setup.steps, observe, on_system);
    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    for (const auto& s : res.steps) {
        rep.max_sweeps_used = std::max(rep.max_sweeps_used, s.sweeps_used);
        rep.max_residual = std::max(rep.max_residual, s.residual);
    }
    rep.unstable_step = res.unstable_step;
    if (setup.steps == 0) rep.min_value = setup.initial.min();
    rep.final_min = res.state.min();
    rep.final_state = std::move(res.state);
    rep.step_log = std::move(res.steps);
    return rep;
}

double run_translation_exactness(std::string_view profile, const SchemeSpec& scheme, int m,
                                 int steps, std::uint64_t seed, const SolverOptions& solver) {
    const auto setup = translation_setup(make_profile(profile, seed), m, steps);
    const auto rep = run_benchmark(setup, scheme, solver);
    if (rep.unstable_step) return std::numeric_limits<double>::infinity();
    return rep.max_deviation;
}

ErrorReport run_rotation(std::string_view profile, const SchemeSpec& scheme, int m, int steps,
                         const SolverOptions& solver, const SystemObserver& on_system) {
    return run_benchmark(rotation_setup(make_profile(profile), m, steps), scheme, solver,
                         on_system);
}

ErrorReport vortex_solution(const SchemeSpec& scheme, int m, const SolverOptions& solver) {
    if (m % 4 != 0) throw std::invalid_argument("vortex runs need M divisible by 4 (N = 5M/4)");
    ErrorReport rep = run_benchmark(vortex_setup(m, 5 * m / 4), scheme, solver);
    rep.min_value = rep.final_min;
    return rep;
}

double vortex_error(const ScalarField& u, const ScalarField& reference) {
    const int m = u.grid().intervals();
    const int mr = reference.grid().intervals();
    if (mr % m != 0) throw std::invalid_argument("reference grid must refine the test grid");
    const int r = mr / m;
    double sum = 0.0;
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m; ++i) sum += std::abs(u(i, j) - reference(r * i, r * j));
    return 4.0 / (static_cast<double>(m) * m) * sum;
}

ErrorReport run_vortex(const SchemeSpec& scheme, int m, const ScalarField& reference,
                       const SolverOptions& solver) {
    ErrorReport rep = vortex_solution(scheme, m, solver);
    if (rep.final_state && !rep.unstable_step) {
        rep.error = vortex_error(*rep.final_state, reference);
    } else {
        rep.error = std::numeric_limits<double>::infinity();
    }
    return rep;
}

InstabilityDemo instability_demo(int m, double t_end, int sweeps) {
    const auto big = vortex_setup(m, 1, t_end);
    const auto small = vortex_setup(m, 16, t_end);
    const double u0_max = big.initial.max_abs();

    SchemeSpec si = {SchemeKind::semi_implicit, KappaStrategy::k3(), {}, BoundaryOverride::upwind};
    SchemeSpec ctu = {SchemeKind::ctu, KappaStrategy::k3(), {CtuVariant::a, 1.0},
                      BoundaryOverride::upwind};
    SolverOptions capped;
    capped.max_sweeps = sweeps;

    auto overshoot = [&](const ErrorReport& r) {
        if (r.unstable_step || !r.final_state) return std::numeric_limits<double>::infinity();
        return r.final_state->max_abs() - u0_max;
    };

    const auto a = run_benchmark(big, si, capped);
    const auto b = run_benchmark(big, ctu, capped);
    const auto c = run_benchmark(small, si, SolverOptions{});

    InstabilityDemo demo{u0_max,
                         overshoot(a),
                         overshoot(b),
                         overshoot(c),
                         false,
                         false,
                         false,
                         0.0,
                         0.0,
                         *a.final_state,
                         *b.final_state,
                         *c.final_state};
    demo.unstable_si2d = !(demo.overshoot_si2d <= kInstabilityOvershoot);
    demo.unstable_ctu = !(demo.overshoot_ctu <= kInstabilityOvershoot);
    demo.unstable_small = !(demo.overshoot_small <= kInstabilityOvershoot);
    demo.moved_ctu = vortex_error(demo.field_ctu, big.initial);
    demo.moved_small = vortex_error(demo.field_small, big.initial);
    return demo;
}

EocTable eoc(const std::vector<std::pair<int, double>>& table) {
    if (table.size() < 2) throw std::invalid_argument("EOC needs at least two grid levels");
    EocTable out{table, {}};
    for (std::size_t k = 0; k + 1 < table.size(); ++k) {
        if (table[k + 1].first != 2 * table[k].first) {
            throw std::invalid_argument("EOC levels must double M");
        }
        out.eoc.push_back(std::log2(table[k].second / table[k + 1].second));
    }
    return out;
}

void write_results_csv(std::ostream& out, const std::vector<ErrorReport>& reports) {
    out << "suite,scheme,kappa,M,N,error,min,eoc_prev,wall_ms\n";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        std::string eoc_prev;
        // The previous row of the same suite/scheme/kappa at half the resolution.
        for (std::size_t p = 0; p < k; ++p) {
            const auto& q = reports[p];
            if (q.suite == r.suite && q.scheme == r.scheme && q.kappa == r.kappa &&
                2 * q.m == r.m && q.error > 0.0 && r.error > 0.0) {
                eoc_prev = csv::num(std::log2(q.error / r.error));
            }
        }
        out << r.suite << ',' << r.scheme << ',' << r.kappa << ',' << r.m << ',' << r.n << ','
            << csv::num(r.error) << ',' << csv::num(r.min_value) << ',' << eoc_prev << ','
            << csv::num(r.wall_ms) << '\n';
    }
}

std::vector<SchemeSpec> table_schemes(BoundaryOverride override) {
    std::vector<SchemeSpec> out;
    for (const auto& k : {KappaStrategy::kp(), KappaStrategy::km(), KappaStrategy::k0(),
                          KappaStrategy::k3()}) {
        out.push_back({SchemeKind::semi_implicit, k, {}, override});
    }
    out.push_back({SchemeKind::ctu, KappaStrategy::k3(), {CtuVariant::a, 1.0}, override});
    return out;
}

} // namespace kadv
