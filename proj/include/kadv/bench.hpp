#pragma once

#include "kadv/assembly.hpp"
#include "kadv/profiles.hpp"
#include "kadv/solver.hpp"
#include "kadv/stepper.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kadv {

/// Outcome of one benchmark run.
struct ErrorReport {
    std::string suite;
    std::string scheme;
    std::string kappa;
    int m = 0;
    int n = 0;
    /// E = h^dims * max_n sum_{i,j=1..M} |U^n - u(t^n)| (rotation/translation), or the
    /// reference-solution distance e (vortex).
    double error = 0.0;
    /// Largest nodal |U - u| over all steps, when an exact solution exists.
    double max_deviation = 0.0;
    /// min over steps 1..N of min_ij U (vortex: at the final step).
    double min_value = 0.0;
    /// min_ij U at the final step.
    double final_min = 0.0;
    double wall_ms = 0.0;
    int max_sweeps_used = 0;
    double max_residual = 0.0;
    std::optional<int> unstable_step;
    std::optional<ScalarField> final_state;
    std::vector<StepDiagnostics> step_log;
};

/// A time-dependent problem with optional exact solution.
struct BenchmarkSetup {
    std::string suite;
    Problem problem;
    ScalarField initial;
    int steps;
    /// u(x, y, t), empty when no exact solution is known.
    BoundaryData exact;
};

BenchmarkSetup translation_setup(const AnalyticProfile& profile, int m, int steps,
                                 double v = 0.8, double w = 0.9, double t_end = 1.0,
                                 int dims = 2, double x_min = -1.0, double x_max = 1.0);
BenchmarkSetup rotation_setup(const AnalyticProfile& profile, int m, int steps);
BenchmarkSetup vortex_setup(int m, int steps, double t_end = 2.5);

ErrorReport run_benchmark(const BenchmarkSetup& setup, const SchemeSpec& scheme,
                          const SolverOptions& solver = {}, const SystemObserver& on_system = {});

/// Max deviation from the exact translate with velocity (0.8, 0.9) on (-1,1)^2, t in [0,1].
double run_translation_exactness(std::string_view profile, const SchemeSpec& scheme, int m,
                                 int steps, std::uint64_t seed, const SolverOptions& solver = {});

ErrorReport run_rotation(std::string_view profile, const SchemeSpec& scheme, int m, int steps,
                         const SolverOptions& solver = {}, const SystemObserver& on_system = {});

/// Vortex solution at t = 2.5 with N = 5M/4 and the scheme's boundary override.
ErrorReport vortex_solution(const SchemeSpec& scheme, int m, const SolverOptions& solver = {});

/// e = (4/M^2) sum_{i,j=0..M} |U_ij - Uref_{ri,rj}|, r = M_ref/M.
double vortex_error(const ScalarField& u, const ScalarField& reference);

/// Runs M and fills `error` against a precomputed reference solution.
ErrorReport run_vortex(const SchemeSpec& scheme, int m, const ScalarField& reference,
                       const SolverOptions& solver = {});

struct InstabilityDemo {
    double initial_max = 0.0;
    double overshoot_si2d = 0.0;   // (a) one step, si2d + k3, one sweep
    double overshoot_ctu = 0.0;    // (b) same step, CTU-A + k3
    double overshoot_small = 0.0;  // (c) 16 steps, si2d + k3
    bool unstable_si2d = false;
    bool unstable_ctu = false;
    bool unstable_small = false;
    /// Distance of (b) and (c) from u0 in the vortex error norm.
    double moved_ctu = 0.0;
    double moved_small = 0.0;
    ScalarField field_si2d;
    ScalarField field_ctu;
    ScalarField field_small;
};

inline constexpr double kInstabilityOvershoot = 0.5;

InstabilityDemo instability_demo(int m = 80, double t_end = 0.2, int sweeps = 1);

struct EocTable {
    std::vector<std::pair<int, double>> levels;
    /// eoc[k] relates levels[k] and levels[k+1].
    std::vector<double> eoc;
};

/// EOC_k = log2(E_k / E_{k+1}); throws unless M doubles between levels.
EocTable eoc(const std::vector<std::pair<int, double>>& table);

/// `suite,scheme,kappa,M,N,error,min,eoc_prev,wall_ms`
void write_results_csv(std::ostream& out, const std::vector<ErrorReport>& reports);

/// The five scheme columns of the rotation/vortex tables: si2d with kp, km, k0,
/// k3 and CTU-A with k3.
std::vector<SchemeSpec> table_schemes(BoundaryOverride override = BoundaryOverride::none);

} // namespace kadv
