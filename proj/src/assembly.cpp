#include "kadv/assembly.hpp"

#include "kadv/csv.hpp"

#include <stdexcept>

namespace kadv {

SchemeSpec SchemeSpec::parse(std::string_view scheme, std::string_view kappa, double theta) {
    SchemeSpec s;
    s.kappa = KappaStrategy::parse(kappa);
    if (scheme == "explicit") {
        s.kind = SchemeKind::explicit_kappa;
    } else if (scheme == "implicit") {
        s.kind = SchemeKind::implicit_kappa;
    } else if (scheme == "si" || scheme == "si1d" || scheme == "si2d") {
        s.kind = SchemeKind::semi_implicit;
    } else if (scheme == "si-b") {
        s.kind = SchemeKind::semi_implicit_b;
    } else if (scheme == "ctu-a" || scheme == "ctu") {
        s.kind = SchemeKind::ctu;
        s.ctu = {CtuVariant::a, 1.0};
    } else if (scheme == "ctu-b") {
        s.kind = SchemeKind::ctu;
        s.ctu = {CtuVariant::b, 0.0};
    } else if (scheme == "ctu-blend") {
        if (!(theta >= 0.0 && theta <= 1.0)) {
            throw std::invalid_argument("ctu blend weight must lie in [0, 1]");
        }
        s.kind = SchemeKind::ctu;
        s.ctu = {CtuVariant::blend, theta};
    } else {
        throw std::invalid_argument("unknown scheme: " + std::string(scheme));
    }
    return s;
}

std::string SchemeSpec::scheme_name() const {
    switch (kind) {
    case SchemeKind::explicit_kappa: return "explicit";
    case SchemeKind::implicit_kappa: return "implicit";
    case SchemeKind::semi_implicit: return "si";
    case SchemeKind::semi_implicit_b: return "si-b";
    case SchemeKind::ctu:
        switch (ctu.variant) {
        case CtuVariant::a: return "ctu-a";
        case CtuVariant::b: return "ctu-b";
        case CtuVariant::blend: return "ctu-blend(" + csv::num(ctu.theta) + ")";
        }
    }
    return "?";
}

std::string SchemeSpec::label() const { return scheme_name() + "+" + kappa.label(); }

void SchemeSpec::validate(int dims) const {
    const bool one_d_only = kind == SchemeKind::explicit_kappa ||
                            kind == SchemeKind::implicit_kappa ||
                            kind == SchemeKind::semi_implicit_b;
    if (one_d_only && dims != 1) {
        throw std::invalid_argument(scheme_name() + " is defined for 1D grids only");
    }
    if (kind == SchemeKind::ctu && dims != 2) {
        throw std::invalid_argument("CTU requires a 2D grid");
    }
}

namespace {

NodeParams params(const CourantField& courant, const KappaField& kappa, Axis axis,
                  std::size_t p) {
    return axis == Axis::x ? NodeParams{courant.c[p], kappa.kx[p]}
                           : NodeParams{courant.d[p], kappa.ky[p]};
}

AxisNeighbourhood neighbourhood(const CourantField& courant, const KappaField& kappa, int i,
                                int j) {
    const Grid& g = courant.grid;
    return {params(courant, kappa, Axis::x, g.index(i - 1, j)),
            params(courant, kappa, Axis::x, g.index(i, j)),
            params(courant, kappa, Axis::x, g.index(i + 1, j))};
}

} // namespace

StencilRow build_row(const SchemeSpec& scheme, const CourantField& courant,
                     const KappaField& kappa, int i, int j) {
    const auto p = courant.grid.index(i, j);
    const NodeParams x = params(courant, kappa, Axis::x, p);
    switch (scheme.kind) {
    case SchemeKind::explicit_kappa:
        return explicit_kappa_row(Axis::x, neighbourhood(courant, kappa, i, j));
    case SchemeKind::implicit_kappa:
        return implicit_kappa_row(Axis::x, neighbourhood(courant, kappa, i, j));
    case SchemeKind::semi_implicit_b: return semi_implicit_b_row(Axis::x, x);
    case SchemeKind::semi_implicit:
        if (courant.grid.dims() == 1) return semi_implicit_row(Axis::x, x);
        return semi_implicit_2d_row(x, params(courant, kappa, Axis::y, p));
    case SchemeKind::ctu: return ctu_row(x, params(courant, kappa, Axis::y, p), scheme.ctu);
    }
    return {};
}

KappaField scheme_kappa(const SchemeSpec& scheme, const CourantField& courant) {
    return boundary_kappa_override(evaluate_kappa(scheme.kappa, courant), courant,
                                   scheme.boundary_override);
}

StencilSystem assemble_rows(const SchemeSpec& scheme, const CourantField& courant,
                            const KappaField& kappa) {
    const Grid& g = courant.grid;
    if (!(kappa.grid == g)) throw std::invalid_argument("field grids do not match");
    scheme.validate(g.dims());
    StencilSystem sys(g);
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (!g.on_boundary(i, j)) sys.rows[g.index(i, j)] = build_row(scheme, courant, kappa, i, j);
        }
    }
    return sys;
}

void assemble_rhs(StencilSystem& sys, const ScalarField& u_old, const BoundaryData& boundary,
                  double t_old, double tau) {
    const Grid& g = sys.grid;
    if (!(u_old.grid() == g)) throw std::invalid_argument("field grids do not match");
    if (!boundary) throw std::logic_error("Dirichlet nodes need boundary data");
    const double t_new = t_old + tau;

    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const auto p = g.index(i, j);
            if (g.on_boundary(i, j)) {
                sys.rhs[p] = boundary(g.x(i), g.y(j), t_new);
                continue;
            }
            const StencilRow& row = sys.rows[p];
            double rhs = u_old(i, j);
            for (std::size_t s = 0; s < kOffsets.size(); ++s) {
                const int ii = i + kOffsets[s].di, jj = j + kOffsets[s].dj;
                const bool inside = g.contains(ii, jj);
                if (const double b = row.explicit_part[s]; b != 0.0) {
                    rhs += b * (inside ? u_old(ii, jj) : boundary(g.x(ii), g.y(jj), t_old));
                }
                if (const double a = row.implicit_part[s]; a != 0.0 && !inside) {
                    rhs -= a * boundary(g.x(ii), g.y(jj), t_new);
                }
            }
            sys.rhs[p] = rhs;
        }
    }
}

StencilSystem assemble(const SchemeSpec& scheme, const ScalarField& u_old,
                       const CourantField& courant, const KappaField& kappa,
                       const BoundaryData& boundary, double t_old, double tau) {
    if (!(courant.grid == u_old.grid())) throw std::invalid_argument("field grids do not match");
    StencilSystem sys = assemble_rows(scheme, courant, kappa);
    assemble_rhs(sys, u_old, boundary, t_old, tau);
    return sys;
}

namespace {

StencilSystem assemble_with(SchemeSpec scheme, const ScalarField& u_old,
                            const CourantField& courant, const BoundaryData& boundary,
                            double t_old, double tau) {
    return assemble(scheme, u_old, courant, scheme_kappa(scheme, courant), boundary, t_old, tau);
}

} // namespace

ScalarField explicit_kappa_step(const ScalarField& u_old, const CourantField& courant,
                                const KappaStrategy& kappa, const BoundaryData& boundary,
                                double t_old, double tau) {
    StencilSystem sys = assemble_with({SchemeKind::explicit_kappa, kappa, {}, {}}, u_old,
                                      courant, boundary, t_old, tau);
    return ScalarField(u_old.grid(), std::move(sys.rhs));
}

StencilSystem implicit_kappa_stencil(const ScalarField& u_old, const CourantField& courant,
                                     const KappaStrategy& kappa, const BoundaryData& boundary,
                                     double t_old, double tau) {
    return assemble_with({SchemeKind::implicit_kappa, kappa, {}, {}}, u_old, courant, boundary,
                         t_old, tau);
}

StencilSystem semi_implicit_stencil(const ScalarField& u_old, const CourantField& courant,
                                    const KappaStrategy& kappa, const BoundaryData& boundary,
                                    double t_old, double tau) {
    return assemble_with({SchemeKind::semi_implicit, kappa, {}, {}}, u_old, courant, boundary,
                         t_old, tau);
}

StencilSystem semi_implicit_variant_b_stencil(const ScalarField& u_old,
                                              const CourantField& courant,
                                              const KappaStrategy& kappa,
                                              const BoundaryData& boundary, double t_old,
                                              double tau) {
    return assemble_with({SchemeKind::semi_implicit_b, kappa, {}, {}}, u_old, courant, boundary,
                         t_old, tau);
}

StencilSystem semi_implicit_2d_stencil(const ScalarField& u_old, const CourantField& courant,
                                       const KappaStrategy& kappa, const BoundaryData& boundary,
                                       double t_old, double tau, BoundaryOverride override) {
    return assemble_with({SchemeKind::semi_implicit, kappa, {}, override}, u_old, courant,
                         boundary, t_old, tau);
}

StencilSystem ctu_stencil(const ScalarField& u_old, const CourantField& courant,
                          const KappaStrategy& kappa, CtuChoice variant,
                          const BoundaryData& boundary, double t_old, double tau,
                          BoundaryOverride override) {
    return assemble_with({SchemeKind::ctu, kappa, variant, override}, u_old, courant, boundary,
                         t_old, tau);
}

} // namespace kadv
