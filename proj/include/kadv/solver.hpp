#pragma once

#include "kadv/field.hpp"
#include "kadv/stencil.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kadv {

/// One lexicographic Gauss-Seidel ordering: i ascending or descending (x),
/// j ascending or descending (y). j is the outer loop.
struct SweepOrdering {
    bool i_ascending = true;
    bool j_ascending = true;
};

/// The fixed rotation used by fast sweeping: (i up, j up), (i down, j up),
/// (i up, j down), (i down, j down) in 2D; forward then backward in 1D.
std::vector<SweepOrdering> sweep_orderings(int dims);

/// One in-place Gauss-Seidel pass in the given order. Returns the max-norm
/// residual of the system after the pass. Throws std::domain_error on a
/// non-positive diagonal.
double gauss_seidel_pass(const StencilSystem& system, std::span<double> x, SweepOrdering ordering);

struct SolverOptions {
    int max_sweeps = 3;
    /// Stop once residual <= rtol * (1 + max|rhs|).
    double rtol = 1e-12;
};

struct SolveReport {
    int passes = 0;
    int sweeps_used = 0;
    double residual = 0.0;
    bool converged = false;
    bool finite = true;
    /// Residual after every pass, in order.
    std::vector<double> pass_residuals;
};

/// Gauss-Seidel in the fast-sweeping rotation starting from `x` (the caller
/// passes U^n). A non-finite iterate stops the solve and is reported, not masked.
SolveReport fast_sweeping_solve(const StencilSystem& system, std::span<double> x,
                                const SolverOptions& options = {});

inline constexpr std::size_t kDefaultDenseLimit = 10000;

/// Assembles the system matrix and solves it by LU factorisation with
/// pivoting. Throws std::length_error above `max_unknowns` and
/// std::runtime_error for a singular matrix.
std::vector<double> direct_solve(const StencilSystem& system,
                                 std::size_t max_unknowns = kDefaultDenseLimit);

} // namespace kadv
