#pragma once

#include "kadv/field.hpp"
#include "kadv/grid.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kadv {

/// sign with sign(0) = +1. Every term multiplied by a zero velocity vanishes,
/// so the branch taken at V = 0 is unobservable.
inline double upwind_sign(double v) noexcept { return v >= 0.0 ? 1.0 : -1.0; }

enum class ThirdOrderVariant { explicit_scheme, implicit_scheme, semi_implicit };

/// kappa that cancels the leading dispersive error for constant velocity:
///   explicit: sign(C)(1 - 2|C|)/3, implicit: sign(C)(1 + 2|C|)/3,
///   semi-implicit: sign(C)(1 - |C|)/3.
double third_order_kappa(ThirdOrderVariant variant, double courant) noexcept;

/// Rule producing (kappa_x, kappa_y) at a node from its Courant numbers.
struct KappaStrategy {
    enum class Kind {
        constant,         // (kx, ky)
        sign,             // kp: sign(C), sign(D)
        negative_sign,    // km: -sign(C), -sign(D)
        third_explicit,
        third_implicit,
        third_semi,       // k3
    };

    Kind kind = Kind::constant;
    double kx = 0.0;
    double ky = 0.0;

    static KappaStrategy constant(double kx, double ky = 0.0) { return {Kind::constant, kx, ky}; }
    static KappaStrategy kp() { return {Kind::sign, 0, 0}; }
    static KappaStrategy km() { return {Kind::negative_sign, 0, 0}; }
    static KappaStrategy k0() { return constant(0.0, 0.0); }
    static KappaStrategy k3() { return {Kind::third_semi, 0, 0}; }

    double along(Axis axis, double courant) const noexcept;

    /// kp, km, k0, k3, third-explicit, third-implicit, third-semi,
    /// `const:<k>` or `const:<kx>,<ky>`.
    static KappaStrategy parse(std::string_view text);
    std::string label() const;

    friend bool operator==(const KappaStrategy&, const KappaStrategy&) = default;
};

/// How nodes next to the boundary pick kappa so the implicit part never reaches
/// unknowns outside the domain.
enum class BoundaryOverride {
    none,
    /// kappa = sign(C) along the axis: the stencil stays compact on the upwind side.
    upwind,
    /// kappa = 1 along the axis regardless of flow direction.
    literal,
};

BoundaryOverride parse_boundary_override(std::string_view text);
std::string to_string(BoundaryOverride o);

/// kappa evaluated per node, frozen for one step.
struct KappaField {
    Grid grid;
    std::vector<double> kx;
    std::vector<double> ky;

    /// Nodes whose kappa falls outside [-1, 1]; permitted, reported only.
    std::size_t out_of_range_count() const;
};

KappaField evaluate_kappa(const KappaStrategy& strategy, const CourantField& courant);

/// Replaces kappa_x on columns i in {1, M-1} and kappa_y on rows j in {1, M-1};
/// interior nodes are untouched.
KappaField boundary_kappa_override(KappaField field, const CourantField& courant,
                                   BoundaryOverride mode);

} // namespace kadv
