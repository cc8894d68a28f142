#pragma once

#include "kadv/field.hpp"
#include "kadv/stencil.hpp"

namespace kadv {

/// Courant number and kappa at one node.
struct NodeParams {
    double courant = 0.0;
    double kappa = 0.0;
};

/// A node and its two neighbours along one axis. The fully explicit and fully
/// implicit schemes difference V*d^kappa U, so they need neighbour values.
struct AxisNeighbourhood {
    NodeParams prev;
    NodeParams here;
    NodeParams next;

    static AxisNeighbourhood uniform(double courant, double kappa) {
        const NodeParams p{courant, kappa};
        return {p, p, p};
    }
};

namespace stencils {

Stencil axis_unit(Axis axis, int k);
/// h * d^- at offset `base`: U_base - U_{base-1}
Stencil backward_difference(Axis axis, int base);
/// h * d^+ at offset `base`: U_{base+1} - U_base
Stencil forward_difference(Axis axis, int base);
/// h * d^kappa at offset `base`: ((1-k) d^- + (1+k) d^+) / 2
Stencil kappa_difference(Axis axis, int base, double kappa);

} // namespace stencils

/// Fully explicit kappa-scheme (alpha = 0).
StencilRow explicit_kappa_row(Axis axis, const AxisNeighbourhood& n);

/// Fully implicit kappa-scheme (beta = 0).
StencilRow implicit_kappa_row(Axis axis, const AxisNeighbourhood& n);

/// Semi-implicit kappa-scheme:
///   U^{n+1} + C (h d^{-+} U^{n+1} - h/2 d^k U^{n+1}_{i-+1}) = U^n - C h/2 d^k U^n,
/// with the upwind side chosen opposite to sign(C).
StencilRow semi_implicit_row(Axis axis, NodeParams node);

/// Forward-series variant: U^{n+1} + C h/2 d^k U^{n+1} = U^n - C (h d^{-+} U^n - h/2 d^k U^n_{i-+1}).
StencilRow semi_implicit_b_row(Axis axis, NodeParams node);

} // namespace kadv
