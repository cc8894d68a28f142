#include "kadv/field.hpp"

#include "kadv/csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace kadv {

ScalarField::ScalarField(Grid grid, double value) : grid_(grid), values_(grid.size(), value) {}

ScalarField::ScalarField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("value count does not match grid node count");
    }
}

bool ScalarField::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double ScalarField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

ScalarField sample(const Grid& grid, const PlaneFunction& f) {
    ScalarField out(grid);
    for (int j = 0; j < grid.ny(); ++j)
        for (int i = 0; i < grid.nx(); ++i) out(i, j) = f(grid.x(i), grid.y(j));
    return out;
}

VelocityField VelocityField::sample(const Grid& grid, const VelocityFunction& f) {
    VelocityField vel{grid, std::vector<double>(grid.size()), std::vector<double>(grid.size())};
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            auto [v, w] = f(grid.x(i), grid.y(j));
            const auto p = grid.index(i, j);
            vel.v[p] = v;
            vel.w[p] = grid.dims() == 2 ? w : 0.0;
        }
    }
    return vel;
}

VelocityField VelocityField::constant(const Grid& grid, double v, double w) {
    return sample(grid, [v, w](double, double) { return std::pair{v, w}; });
}

double CourantField::max_abs() const {
    double m = 0.0;
    for (std::size_t p = 0; p < c.size(); ++p) m = std::max({m, std::abs(c[p]), std::abs(d[p])});
    return m;
}

CourantField courant_numbers(const VelocityField& velocity, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("time step must be positive");
    const double scale = tau / velocity.grid.spacing();
    CourantField out{velocity.grid, velocity.v, velocity.w};
    for (auto& c : out.c) c *= scale;
    for (auto& d : out.d) d *= scale;
    return out;
}

double kappa_gradient(const ScalarField& field, int i, int j, Axis axis, double kappa) {
    const Grid& g = field.grid();
    const int di = axis == Axis::x ? 1 : 0;
    const int dj = axis == Axis::y ? 1 : 0;
    if (axis == Axis::y && g.dims() != 2) throw std::invalid_argument("y axis on a 1D grid");
    if (!g.contains(i - di, j - dj) || !g.contains(i + di, j + dj)) {
        throw std::out_of_range("kappa_gradient needs both axis neighbours inside the grid");
    }
    const double back = field(i, j) - field(i - di, j - dj);
    const double fwd = field(i + di, j + dj) - field(i, j);
    return ((1.0 - kappa) * back + (1.0 + kappa) * fwd) / (2.0 * g.spacing());
}

void write_field_csv(std::ostream& out, const ScalarField& field) {
    const Grid& g = field.grid();
    out << (g.dims() == 2 ? "x,y,value\n" : "x,value\n");
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            out << csv::num(g.x(i));
            if (g.dims() == 2) out << ',' << csv::num(g.y(j));
            out << ',' << csv::num(field(i, j)) << '\n';
        }
    }
}

} // namespace kadv
