#pragma once

#include "kadv/field.hpp"
#include "kadv/kappa.hpp"
#include "kadv/schemes2d.hpp"
#include "kadv/stencil.hpp"

#include <functional>
#include <string>
#include <string_view>

namespace kadv {

enum class SchemeKind {
    explicit_kappa,   // 1D only
    implicit_kappa,   // 1D only
    semi_implicit,    // 1D, or dimension by dimension in 2D
    semi_implicit_b,  // 1D only
    ctu,              // 2D only
};

struct SchemeSpec {
    SchemeKind kind = SchemeKind::semi_implicit;
    KappaStrategy kappa = KappaStrategy::k0();
    CtuChoice ctu{};
    BoundaryOverride boundary_override = BoundaryOverride::none;

    /// explicit, implicit, si (aliases si1d, si2d), si-b, ctu-a, ctu-b, ctu-blend.
    /// `theta` applies to ctu-blend only.
    static SchemeSpec parse(std::string_view scheme, std::string_view kappa, double theta = 1.0);
    std::string scheme_name() const;
    std::string label() const;

    /// Throws std::invalid_argument if the scheme is not defined for `dims`.
    void validate(int dims) const;
};

/// Dirichlet data u(x, y, t); also queried at ghost positions outside the grid.
using BoundaryData = std::function<double(double x, double y, double t)>;

/// The row at interior node (i, j) for frozen Courant numbers and kappa.
StencilRow build_row(const SchemeSpec& scheme, const CourantField& courant,
                     const KappaField& kappa, int i, int j);

/// The rows of every interior node; boundary rows stay zero and rhs is left
/// empty. Courant numbers and kappa are frozen, so one call serves all steps.
StencilSystem assemble_rows(const SchemeSpec& scheme, const CourantField& courant,
                            const KappaField& kappa);

/// Fills `system.rhs` for the step t_old -> t_old + tau from rows already in place.
void assemble_rhs(StencilSystem& system, const ScalarField& u_old, const BoundaryData& boundary,
                  double t_old, double tau);

/// Assembles one step t_old -> t_old + tau. Boundary nodes become identity rows
/// with rhs = boundary(x, y, t_new). Stencil references outside the grid are
/// evaluated from `boundary` (at t_old on the explicit side, t_new on the
/// implicit side) and moved into rhs.
StencilSystem assemble(const SchemeSpec& scheme, const ScalarField& u_old,
                       const CourantField& courant, const KappaField& kappa,
                       const BoundaryData& boundary, double t_old, double tau);

/// Kappa field for a scheme: the strategy evaluated per node plus the scheme's
/// boundary override.
KappaField scheme_kappa(const SchemeSpec& scheme, const CourantField& courant);

// Single-operation entry points for the 1D schemes.

ScalarField explicit_kappa_step(const ScalarField& u_old, const CourantField& courant,
                                const KappaStrategy& kappa, const BoundaryData& boundary,
                                double t_old, double tau);
StencilSystem implicit_kappa_stencil(const ScalarField& u_old, const CourantField& courant,
                                     const KappaStrategy& kappa, const BoundaryData& boundary,
                                     double t_old, double tau);
StencilSystem semi_implicit_stencil(const ScalarField& u_old, const CourantField& courant,
                                    const KappaStrategy& kappa, const BoundaryData& boundary,
                                    double t_old, double tau);
StencilSystem semi_implicit_variant_b_stencil(const ScalarField& u_old,
                                              const CourantField& courant,
                                              const KappaStrategy& kappa,
                                              const BoundaryData& boundary, double t_old,
                                              double tau);

// 2D entry points.

StencilSystem semi_implicit_2d_stencil(const ScalarField& u_old, const CourantField& courant,
                                       const KappaStrategy& kappa, const BoundaryData& boundary,
                                       double t_old, double tau,
                                       BoundaryOverride override = BoundaryOverride::none);
StencilSystem ctu_stencil(const ScalarField& u_old, const CourantField& courant,
                          const KappaStrategy& kappa, CtuChoice variant,
                          const BoundaryData& boundary, double t_old, double tau,
                          BoundaryOverride override = BoundaryOverride::none);

} // namespace kadv
