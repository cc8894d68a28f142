#pragma once

#include "kadv/grid.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace kadv {

/// Nodal values U_ij on a grid, stored row-major (j outer, i inner).
class ScalarField {
public:
    explicit ScalarField(Grid grid, double value = 0.0);
    ScalarField(Grid grid, std::vector<double> values);

    const Grid& grid() const noexcept { return grid_; }
    std::span<double> values() noexcept { return values_; }
    std::span<const double> values() const noexcept { return values_; }

    double& operator()(int i, int j = 0) noexcept { return values_[grid_.index(i, j)]; }
    double operator()(int i, int j = 0) const noexcept { return values_[grid_.index(i, j)]; }

    bool all_finite() const noexcept;
    double min() const;
    double max() const;
    double max_abs() const;

private:
    Grid grid_;
    std::vector<double> values_;
};

using PlaneFunction = std::function<double(double x, double y)>;
using VelocityFunction = std::function<std::pair<double, double>(double x, double y)>;

ScalarField sample(const Grid& grid, const PlaneFunction& f);

/// Per-node velocity (V, W). W is identically zero on 1D grids.
struct VelocityField {
    Grid grid;
    std::vector<double> v;
    std::vector<double> w;

    static VelocityField sample(const Grid& grid, const VelocityFunction& f);
    static VelocityField constant(const Grid& grid, double v, double w = 0.0);
};

/// Signed Courant numbers C = tau*V/h and D = tau*W/h.
struct CourantField {
    Grid grid;
    std::vector<double> c;
    std::vector<double> d;

    double max_abs() const;
};

CourantField courant_numbers(const VelocityField& velocity, double tau);

enum class Axis { x, y };

/// The kappa-weighted gradient at node (i, j) along `axis`, in divided-difference
/// form: ((1-k)(U_i - U_{i-1}) + (1+k)(U_{i+1} - U_i)) / (2h).
double kappa_gradient(const ScalarField& field, int i, int j, Axis axis, double kappa);

/// Writes `x[,y],value` rows, j outer and i inner, with 17 significant digits.
void write_field_csv(std::ostream& out, const ScalarField& field);

} // namespace kadv
