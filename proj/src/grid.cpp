#include "kadv/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kadv {

Grid::Grid(double x_min, double x_max, int intervals, int dims)
    : x_min_(x_min), x_max_(x_max), m_(intervals), dims_(dims), h_(0.0) {
    if (!(std::isfinite(x_min) && std::isfinite(x_max)) || !(x_max > x_min)) {
        throw std::invalid_argument("degenerate domain: x_max must exceed x_min");
    }
    if (intervals < kMinIntervals) {
        throw std::invalid_argument("M too small for stencil: need M >= " +
                                    std::to_string(kMinIntervals));
    }
    if (dims != 1 && dims != 2) {
        throw std::invalid_argument("grid dimension must be 1 or 2");
    }
    h_ = (x_max - x_min) / intervals;
}

Grid make_grid(double x_min, double x_max, int intervals, int dims) {
    return Grid(x_min, x_max, intervals, dims);
}

TimeStepping make_time_stepping(double t_end, int steps) {
    if (steps < 1) throw std::invalid_argument("need at least one time step");
    if (!(t_end > 0.0)) throw std::invalid_argument("final time must be positive");
    return TimeStepping{t_end / steps, steps};
}

} // namespace kadv
