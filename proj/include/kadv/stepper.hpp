#pragma once

#include "kadv/assembly.hpp"
#include "kadv/field.hpp"
#include "kadv/solver.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace kadv {

/// Everything a time loop needs besides the scheme: grid, time-independent
/// velocity, Dirichlet/ghost data and the step size.
struct Problem {
    Grid grid;
    VelocityField velocity;
    BoundaryData boundary;
    double tau;
    double t0 = 0.0;
};

struct StepDiagnostics {
    int step = 0;
    int sweeps_used = 0;
    double residual = 0.0;
    double min_u = 0.0;
    double max_u = 0.0;
};

struct AdvanceResult {
    ScalarField state;
    std::vector<StepDiagnostics> steps;
    /// First step whose solution contained non-finite values.
    std::optional<int> unstable_step;
};

/// Called after every completed step with the step index n (1-based) and U^n.
using StepObserver = std::function<void(int step, const ScalarField& u)>;

/// Optional hook that sees the assembled system and the solved iterate of every
/// step (used by the direct-solver oracle checks).
using SystemObserver =
    std::function<void(int step, const StencilSystem& system, std::span<const double> solution)>;

AdvanceResult advance(const Problem& problem, ScalarField state, const SchemeSpec& scheme,
                      const SolverOptions& solver, int steps, const StepObserver& on_step = {},
                      const SystemObserver& on_system = {});

/// `step,sweeps_used,final_residual,min_U,max_U`
void write_run_log_csv(std::ostream& out, const std::vector<StepDiagnostics>& steps);

} // namespace kadv
