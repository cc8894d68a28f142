#include "kadv/stepper.hpp"

#include "kadv/csv.hpp"

#include <ostream>
#include <stdexcept>

namespace kadv {

AdvanceResult advance(const Problem& problem, ScalarField state, const SchemeSpec& scheme,
                      const SolverOptions& solver, int steps, const StepObserver& on_step,
                      const SystemObserver& on_system) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    if (!(state.grid() == problem.grid) || !(problem.velocity.grid == problem.grid)) {
        throw std::invalid_argument("state, velocity and problem grids differ");
    }
    scheme.validate(problem.grid.dims());

    const CourantField courant = courant_numbers(problem.velocity, problem.tau);
    const KappaField kappa = scheme_kappa(scheme, courant);
    const bool purely_explicit = scheme.kind == SchemeKind::explicit_kappa;

    StencilSystem sys = assemble_rows(scheme, courant, kappa);

    AdvanceResult result{std::move(state), {}, std::nullopt};
    result.steps.reserve(static_cast<std::size_t>(steps));
    for (int n = 1; n <= steps; ++n) {
        const double t_old = problem.t0 + (n - 1) * problem.tau;
        assemble_rhs(sys, result.state, problem.boundary, t_old, problem.tau);

        StepDiagnostics diag{n, 0, 0.0, 0.0, 0.0};
        auto values = result.state.values();
        bool finite = true;
        if (purely_explicit) {
            std::copy(sys.rhs.begin(), sys.rhs.end(), values.begin());
        } else {
            const SolveReport rep = fast_sweeping_solve(sys, values, solver);
            diag.sweeps_used = rep.sweeps_used;
            diag.residual = rep.residual;
            finite = rep.finite;
        }
        finite = finite && result.state.all_finite();
        if (finite) {
            diag.min_u = result.state.min();
            diag.max_u = result.state.max();
        }
        result.steps.push_back(diag);
        if (on_system) on_system(n, sys, result.state.values());
        if (!finite) {
            result.unstable_step = n;
            break;
        }
        if (on_step) on_step(n, result.state);
    }
    return result;
}

void write_run_log_csv(std::ostream& out, const std::vector<StepDiagnostics>& steps) {
    out << "step,sweeps_used,final_residual,min_U,max_U\n";
    for (const auto& s : steps) {
        out << s.step << ',' << s.sweeps_used << ',' << csv::num(s.residual) << ','
            << csv::num(s.min_u) << ',' << csv::num(s.max_u) << '\n';
    }
}

} // namespace kadv
