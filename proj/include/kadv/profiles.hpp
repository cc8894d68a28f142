#pragma once

#include "kadv/field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kadv {

/// A named analytic initial profile u0(x, y). Random polynomials carry their seed
/// and coefficients so a run can be reproduced from its echo.
struct AnalyticProfile {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<double> coefficients;
    PlaneFunction u0;

    double operator()(double x, double y) const { return u0(x, y); }
};

/// Known names: cubic, dist_euclid, dist_max, dist_max_abs, vortex_circle, sine,
/// quadratic_random, cubic_random. Throws std::invalid_argument otherwise.
AnalyticProfile make_profile(std::string_view name, std::uint64_t seed = 0);

std::vector<std::string> profile_names();

ScalarField benchmark_profile(std::string_view name, const Grid& grid, std::uint64_t seed = 0);

/// Solid-body rotation with period 1: u0 evaluated at the back-rotated point.
double exact_rotation(const PlaneFunction& u0, double t, double x, double y);

/// Constant-velocity translation: u0(x - v t, y - w t).
double exact_translation(const PlaneFunction& u0, double v, double w, double t, double x,
                         double y);

/// (V, W) = (-2 pi y, 2 pi x).
std::pair<double, double> rotation_velocity(double x, double y);

/// Single-vortex field on (-1,1)^2; vanishes on the boundary.
std::pair<double, double> vortex_velocity(double x, double y);

} // namespace kadv
