#pragma once

#include "kadv/bench.hpp"
#include "kadv/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace kadv::test {

inline double max_difference(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

inline double max_difference(const ScalarField& a, const ScalarField& b) {
    return max_difference(a.values(), b.values());
}

/// p(x, y) = sum c_ab x^a y^b over a + b <= degree, coefficients in row order
/// (a outer, b inner).
inline AnalyticProfile polynomial(int degree, std::vector<double> c) {
    auto u0 = [degree, c](double x, double y) {
        double sum = 0.0;
        std::size_t k = 0;
        for (int a = 0; a <= degree; ++a) {
            for (int b = 0; a + b <= degree; ++b) sum += c[k++] * std::pow(x, a) * std::pow(y, b);
        }
        return sum;
    };
    return {"polynomial", 0, c, u0};
}

inline AnalyticProfile random_polynomial(int degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::vector<double> c((degree + 1) * (degree + 2) / 2);
    for (double& v : c) v = coef(rng);
    return polynomial(degree, c);
}

inline std::vector<KappaStrategy> table_strategies() {
    return {KappaStrategy::kp(), KappaStrategy::km(), KappaStrategy::k0(), KappaStrategy::k3()};
}

} // namespace kadv::test
