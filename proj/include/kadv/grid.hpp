#pragma once

#include <cstddef>

namespace kadv {

/// Uniform Cartesian grid on [x_min, x_max] (1D) or [x_min, x_max]^2 (2D).
///
/// Nodes are x_i = x_min + i*h for i = 0..M in every axis. Indices outside
/// 0..M are legal for coordinate queries; they address ghost positions used
/// to fold Dirichlet data into the stencils.
class Grid {
public:
    Grid(double x_min, double x_max, int intervals, int dims);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    int intervals() const noexcept { return m_; }
    int dims() const noexcept { return dims_; }
    double spacing() const noexcept { return h_; }

    int nx() const noexcept { return m_ + 1; }
    int ny() const noexcept { return dims_ == 2 ? m_ + 1 : 1; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(nx()) * ny(); }

    double x(int i) const noexcept { return x_min_ + i * h_; }
    double y(int j) const noexcept { return dims_ == 2 ? x_min_ + j * h_ : 0.0; }

    bool contains(int i, int j) const noexcept {
        return i >= 0 && i < nx() && j >= 0 && j < ny();
    }
    /// Dirichlet nodes: the first and last node of every active axis.
    bool on_boundary(int i, int j) const noexcept {
        if (i == 0 || i == m_) return true;
        return dims_ == 2 && (j == 0 || j == m_);
    }
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(j) * nx() + i;
    }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double x_min_;
    double x_max_;
    int m_;
    int dims_;
    double h_;
};

/// Smallest interval count for which every interior stencil (offsets -2..2) fits.
inline constexpr int kMinIntervals = 4;

Grid make_grid(double x_min, double x_max, int intervals, int dims);

struct TimeStepping {
    double tau;
    int steps;

    double time(int n) const noexcept { return n * tau; }
};

TimeStepping make_time_stepping(double t_end, int steps);

} // namespace kadv
