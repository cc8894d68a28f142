#include "kadv/schemes1d.hpp"

#include "kadv/kappa.hpp"

namespace kadv {

namespace stencils {

Stencil axis_unit(Axis axis, int k) {
    return axis == Axis::x ? Stencil::unit(k, 0) : Stencil::unit(0, k);
}

Stencil backward_difference(Axis axis, int base) {
    return axis_unit(axis, base) - axis_unit(axis, base - 1);
}

Stencil forward_difference(Axis axis, int base) {
    return axis_unit(axis, base + 1) - axis_unit(axis, base);
}

Stencil kappa_difference(Axis axis, int base, double kappa) {
    return 0.5 * (1.0 - kappa) * backward_difference(axis, base) +
           0.5 * (1.0 + kappa) * forward_difference(axis, base);
}

} // namespace stencils

using namespace stencils;

StencilRow explicit_kappa_row(Axis axis, const AxisNeighbourhood& n) {
    const double c = n.here.courant;
    Stencil flux;
    if (c >= 0.0) {
        flux = backward_difference(axis, 0) +
               0.5 * (1.0 - c) * kappa_difference(axis, 0, n.here.kappa) -
               0.5 * (1.0 - n.prev.courant) * kappa_difference(axis, -1, n.prev.kappa);
    } else {
        flux = forward_difference(axis, 0) -
               0.5 * (1.0 + n.next.courant) * kappa_difference(axis, 1, n.next.kappa) +
               0.5 * (1.0 + c) * kappa_difference(axis, 0, n.here.kappa);
    }
    return {Stencil{}, -c * flux};
}

StencilRow implicit_kappa_row(Axis axis, const AxisNeighbourhood& n) {
    const double c = n.here.courant;
    Stencil flux;
    if (c >= 0.0) {
        flux = backward_difference(axis, 0) +
               0.5 * (1.0 + c) * kappa_difference(axis, 0, n.here.kappa) -
               0.5 * (1.0 + n.prev.courant) * kappa_difference(axis, -1, n.prev.kappa);
    } else {
        flux = forward_difference(axis, 0) -
               0.5 * (1.0 - n.next.courant) * kappa_difference(axis, 1, n.next.kappa) +
               0.5 * (1.0 - c) * kappa_difference(axis, 0, n.here.kappa);
    }
    return {c * flux, Stencil{}};
}

namespace {

// h d^{-+} U_i - h/2 d^k U_{i-+1}: the upwind-side transport at one time level.
Stencil upwind_transport(Axis axis, NodeParams node) {
    const int up = upwind_sign(node.courant) > 0 ? -1 : 1;
    const Stencil one_sided =
        up < 0 ? backward_difference(axis, 0) : forward_difference(axis, 0);
    return one_sided - 0.5 * kappa_difference(axis, up, node.kappa);
}

} // namespace

StencilRow semi_implicit_row(Axis axis, NodeParams node) {
    const double c = node.courant;
    return {c * upwind_transport(axis, node), -0.5 * c * kappa_difference(axis, 0, node.kappa)};
}

StencilRow semi_implicit_b_row(Axis axis, NodeParams node) {
    const double c = node.courant;
    return {0.5 * c * kappa_difference(axis, 0, node.kappa), -c * upwind_transport(axis, node)};
}

} // namespace kadv
