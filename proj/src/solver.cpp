#include "kadv/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kadv {

std::vector<SweepOrdering> sweep_orderings(int dims) {
    if (dims == 1) return {{true, true}, {false, true}};
    return {{true, true}, {false, true}, {true, false}, {false, false}};
}

namespace {

inline void relax_node(const StencilSystem& sys, std::span<double> x, int i, int j) {
    const Grid& g = sys.grid;
    const auto p = g.index(i, j);
    const Stencil& a = sys.rows[p].implicit_part;
    const double diag = 1.0 + a[0];
    if (!(diag > 0.0)) {
        throw std::domain_error("non-positive diagonal at node (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
    double s = sys.rhs[p];
    for (std::size_t k = 1; k < kOffsets.size(); ++k) {
        if (a[k] == 0.0) continue;
        const int ii = i + kOffsets[k].di, jj = j + kOffsets[k].dj;
        if (g.contains(ii, jj)) s -= a[k] * x[g.index(ii, jj)];
    }
    x[p] = s / diag;
}

} // namespace

double gauss_seidel_pass(const StencilSystem& system, std::span<double> x, SweepOrdering ordering) {
    const Grid& g = system.grid;
    if (x.size() != system.size()) throw std::invalid_argument("iterate size mismatch");
    const int nx = g.nx(), ny = g.ny();
    for (int jc = 0; jc < ny; ++jc) {
        const int j = ordering.j_ascending ? jc : ny - 1 - jc;
        for (int ic = 0; ic < nx; ++ic) {
            const int i = ordering.i_ascending ? ic : nx - 1 - ic;
            relax_node(system, x, i, j);
        }
    }
    return system.residual(x);
}

SolveReport fast_sweeping_solve(const StencilSystem& system, std::span<double> x,
                                const SolverOptions& options) {
    const auto orderings = sweep_orderings(system.grid.dims());
    double rhs_scale = 0.0;
    for (double r : system.rhs) rhs_scale = std::max(rhs_scale, std::abs(r));
    const double tol = options.rtol * (1.0 + rhs_scale);

    SolveReport rep;
    rep.residual = system.residual(x);
    if (!std::isfinite(tol) || !std::isfinite(rep.residual)) {
        rep.finite = false;
        return rep;
    }
    if (rep.residual <= tol) {
        rep.converged = true;
        return rep;
    }
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        rep.sweeps_used = sweep + 1;
        for (const auto& ord : orderings) {
            rep.residual = gauss_seidel_pass(system, x, ord);
            rep.pass_residuals.push_back(rep.residual);
            ++rep.passes;
            if (!std::isfinite(rep.residual)) {
                rep.finite = false;
                return rep;
            }
            if (rep.residual <= tol) {
                rep.converged = true;
                return rep;
            }
        }
    }
    return rep;
}

std::vector<double> direct_solve(const StencilSystem& system, std::size_t max_unknowns) {
    const std::size_t n = system.size();
    if (n > max_unknowns) {
        throw std::length_error("system with " + std::to_string(n) +
                                " unknowns exceeds the direct-solve limit of " +
                                std::to_string(max_unknowns));
    }
    const Grid& g = system.grid;
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(n * 5);
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const auto p = g.index(i, j);
            const Stencil& a = system.rows[p].implicit_part;
            entries.emplace_back(static_cast<int>(p), static_cast<int>(p), 1.0 + a[0]);
            for (std::size_t k = 1; k < kOffsets.size(); ++k) {
                if (a[k] == 0.0) continue;
                const int ii = i + kOffsets[k].di, jj = j + kOffsets[k].dj;
                if (g.contains(ii, jj)) {
                    entries.emplace_back(static_cast<int>(p), static_cast<int>(g.index(ii, jj)), a[k]);
                }
            }
        }
    }
    Eigen::SparseMatrix<double> mat(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    mat.setFromTriplets(entries.begin(), entries.end());
    mat.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(mat);
    if (lu.info() != Eigen::Success) throw std::runtime_error("singular stencil system");
    Eigen::Map<const Eigen::VectorXd> b(system.rhs.data(), static_cast<Eigen::Index>(n));
    Eigen::VectorXd sol = lu.solve(b);
    if (lu.info() != Eigen::Success || !sol.allFinite()) {
        throw std::runtime_error("direct solve failed");
    }
    return {sol.data(), sol.data() + sol.size()};
}

} // namespace kadv
