#include "kadv/profiles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace kadv {

namespace {

using std::numbers::pi;

// Monomials x^a y^b with a + b <= degree, ordered by total degree.
std::vector<std::pair<int, int>> monomials(int degree) {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= degree; ++d)
        for (int a = d; a >= 0; --a) out.emplace_back(a, d - a);
    return out;
}

AnalyticProfile random_polynomial(std::string name, int degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const auto terms = monomials(degree);
    std::vector<double> coeff(terms.size());
    for (auto& c : coeff) c = dist(rng);
    AnalyticProfile p{std::move(name), seed, coeff, {}};
    p.u0 = [terms, coeff](double x, double y) {
        double s = 0.0;
        for (std::size_t k = 0; k < terms.size(); ++k)
            s += coeff[k] * std::pow(x, terms[k].first) * std::pow(y, terms[k].second);
        return s;
    };
    return p;
}

} // namespace

AnalyticProfile make_profile(std::string_view name, std::uint64_t seed) {
    if (name == "cubic") {
        return {"cubic", 0, {}, [](double x, double y) {
                    const double a = x + 0.5;
                    return std::abs(a) * a * a + std::abs(y) * y * y;
                }};
    }
    if (name == "dist_euclid") {
        return {"dist_euclid", 0, {}, [](double x, double y) { return std::hypot(x + 0.5, y); }};
    }
    if (name == "dist_max") {
        return {"dist_max", 0, {}, [](double x, double y) { return std::max(x + 0.5, y); }};
    }
    if (name == "dist_max_abs") {
        return {"dist_max_abs", 0, {},
                [](double x, double y) { return std::max(std::abs(x + 0.5), std::abs(y)); }};
    }
    if (name == "vortex_circle") {
        return {"vortex_circle", 0, {},
                [](double x, double y) { return std::abs(std::hypot(x, y - 0.5) - 0.3); }};
    }
    if (name == "sine") {
        return {"sine", 0, {},
                [](double x, double y) { return std::sin(pi * x) * std::cos(pi * y); }};
    }
    if (name == "quadratic_random") return random_polynomial("quadratic_random", 2, seed);
    if (name == "cubic_random") return random_polynomial("cubic_random", 3, seed);
    throw std::invalid_argument("unknown profile: " + std::string(name));
}

std::vector<std::string> profile_names() {
    return {"cubic",         "dist_euclid", "dist_max",         "dist_max_abs",
            "vortex_circle", "sine",        "quadratic_random", "cubic_random"};
}

ScalarField benchmark_profile(std::string_view name, const Grid& grid, std::uint64_t seed) {
    return sample(grid, make_profile(name, seed).u0);
}

double exact_rotation(const PlaneFunction& u0, double t, double x, double y) {
    const double c = std::cos(2.0 * pi * t);
    const double s = std::sin(2.0 * pi * t);
    return u0(x * c + y * s, y * c - x * s);
}

double exact_translation(const PlaneFunction& u0, double v, double w, double t, double x,
                         double y) {
    return u0(x - v * t, y - w * t);
}

std::pair<double, double> rotation_velocity(double x, double y) {
    return {-2.0 * pi * y, 2.0 * pi * x};
}

std::pair<double, double> vortex_velocity(double x, double y) {
    const double a = pi * (x + 1.0) / 2.0;
    const double b = pi * (y + 1.0) / 2.0;
    const double sa = std::sin(a), ca = std::cos(a);
    const double sb = std::sin(b), cb = std::cos(b);
    return {-4.0 * sa * sa * sb * cb, 4.0 * sb * sb * sa * ca};
}

} // namespace kadv
