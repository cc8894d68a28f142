#include "kadv/schemes2d.hpp"

#include "kadv/kappa.hpp"

#include <algorithm>
#include <cmath>

namespace kadv {

StencilRow semi_implicit_2d_row(NodeParams x, NodeParams y) {
    return semi_implicit_row(Axis::x, x) + semi_implicit_row(Axis::y, y);
}

double CtuChoice::weight_a() const noexcept {
    switch (variant) {
    case CtuVariant::a: return 1.0;
    case CtuVariant::b: return 0.0;
    case CtuVariant::blend: return std::clamp(theta, 0.0, 1.0);
    }
    return 1.0;
}

StencilRow ctu_corner_terms(double c, double d, CtuChoice choice) {
    const int sx = upwind_sign(c) > 0 ? 1 : -1;
    const int sy = upwind_sign(d) > 0 ? 1 : -1;
    const double cd = std::abs(c * d);

    StencilRow row;
    if (cd == 0.0) return row;

    Stencil corner = Stencil::unit(0, 0) + Stencil::unit(-sx, -sy) - Stencil::unit(-sx, 0) -
                     Stencil::unit(0, -sy);
    row.implicit_part = (cd / 6.0) * corner;

    const Stencil cross = 2.0 * Stencil::unit(0, 0) - Stencil::unit(1, 0) - Stencil::unit(-1, 0) -
                          Stencil::unit(0, 1) - Stencil::unit(0, -1);
    const Stencil along = cross + Stencil::unit(sx, sy) + Stencil::unit(-sx, -sy);
    const Stencil across = cross + Stencil::unit(-sx, sy) + Stencil::unit(sx, -sy);
    const double wa = choice.weight_a();
    row.explicit_part = (cd / 12.0) * (wa * along - (1.0 - wa) * across);
    return row;
}

StencilRow ctu_row(NodeParams x, NodeParams y, CtuChoice choice) {
    return semi_implicit_2d_row(x, y) + ctu_corner_terms(x.courant, y.courant, choice);
}

} // namespace kadv
