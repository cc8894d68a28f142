#include "kadv/kappa.hpp"

#include "kadv/csv.hpp"

#include <cmath>
#include <stdexcept>

namespace kadv {

double third_order_kappa(ThirdOrderVariant variant, double courant) noexcept {
    const double s = upwind_sign(courant);
    const double a = std::abs(courant);
    switch (variant) {
    case ThirdOrderVariant::explicit_scheme: return s * (1.0 - 2.0 * a) / 3.0;
    case ThirdOrderVariant::implicit_scheme: return s * (1.0 + 2.0 * a) / 3.0;
    case ThirdOrderVariant::semi_implicit: return s * (1.0 - a) / 3.0;
    }
    return 0.0;
}

double KappaStrategy::along(Axis axis, double courant) const noexcept {
    switch (kind) {
    case Kind::constant: return axis == Axis::x ? kx : ky;
    case Kind::sign: return upwind_sign(courant);
    case Kind::negative_sign: return -upwind_sign(courant);
    case Kind::third_explicit: return third_order_kappa(ThirdOrderVariant::explicit_scheme, courant);
    case Kind::third_implicit: return third_order_kappa(ThirdOrderVariant::implicit_scheme, courant);
    case Kind::third_semi: return third_order_kappa(ThirdOrderVariant::semi_implicit, courant);
    }
    return 0.0;
}

KappaStrategy KappaStrategy::parse(std::string_view text) {
    if (text == "kp" || text == "sign") return kp();
    if (text == "km" || text == "-sign") return km();
    if (text == "k0") return k0();
    if (text == "k3" || text == "third-semi") return k3();
    if (text == "third-explicit") return {Kind::third_explicit, 0, 0};
    if (text == "third-implicit") return {Kind::third_implicit, 0, 0};
    if (text.starts_with("const:")) {
        const std::string body(text.substr(6));
        const auto comma = body.find(',');
        try {
            const double kx = std::stod(body.substr(0, comma));
            const double ky = comma == std::string::npos ? kx : std::stod(body.substr(comma + 1));
            return constant(kx, ky);
        } catch (const std::logic_error&) {
            // fall through to the error below
        }
    }
    throw std::invalid_argument("unknown kappa strategy: " + std::string(text));
}

std::string KappaStrategy::label() const {
    switch (kind) {
    case Kind::constant:
        if (kx == 0.0 && ky == 0.0) return "k0";
        return "const:" + csv::num(kx) + "," + csv::num(ky);
    case Kind::sign: return "kp";
    case Kind::negative_sign: return "km";
    case Kind::third_explicit: return "third-explicit";
    case Kind::third_implicit: return "third-implicit";
    case Kind::third_semi: return "k3";
    }
    return "?";
}

BoundaryOverride parse_boundary_override(std::string_view text) {
    if (text == "none") return BoundaryOverride::none;
    if (text == "upwind") return BoundaryOverride::upwind;
    if (text == "literal") return BoundaryOverride::literal;
    throw std::invalid_argument("unknown boundary override: " + std::string(text));
}

std::string to_string(BoundaryOverride o) {
    switch (o) {
    case BoundaryOverride::none: return "none";
    case BoundaryOverride::upwind: return "upwind";
    case BoundaryOverride::literal: return "literal";
    }
    return "?";
}

std::size_t KappaField::out_of_range_count() const {
    std::size_t n = 0;
    for (std::size_t p = 0; p < kx.size(); ++p)
        if (std::abs(kx[p]) > 1.0 || std::abs(ky[p]) > 1.0) ++n;
    return n;
}

KappaField evaluate_kappa(const KappaStrategy& strategy, const CourantField& courant) {
    KappaField out{courant.grid, std::vector<double>(courant.c.size()),
                   std::vector<double>(courant.c.size())};
    for (std::size_t p = 0; p < courant.c.size(); ++p) {
        out.kx[p] = strategy.along(Axis::x, courant.c[p]);
        out.ky[p] = strategy.along(Axis::y, courant.d[p]);
    }
    return out;
}

KappaField boundary_kappa_override(KappaField field, const CourantField& courant,
                                   BoundaryOverride mode) {
    if (mode == BoundaryOverride::none) return field;
    const Grid& g = field.grid;
    const int m = g.intervals();
    auto forced = [mode](double c) { return mode == BoundaryOverride::literal ? 1.0 : upwind_sign(c); };
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const auto p = g.index(i, j);
            if (i == 1 || i == m - 1) field.kx[p] = forced(courant.c[p]);
            if (g.dims() == 2 && (j == 1 || j == m - 1)) field.ky[p] = forced(courant.d[p]);
        }
    }
    return field;
}

} // namespace kadv
