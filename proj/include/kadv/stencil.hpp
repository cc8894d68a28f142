#pragma once

#include "kadv/field.hpp"
#include "kadv/grid.hpp"

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace kadv {

struct Offset {
    int di;
    int dj;
    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Every neighbour a scheme in this library can touch: the centre, axis offsets
/// +-1 and +-2 in each direction, and the four diagonal corners.
inline constexpr std::array<Offset, 13> kOffsets{{
    {0, 0},
    {-2, 0}, {-1, 0}, {1, 0}, {2, 0},
    {0, -2}, {0, -1}, {0, 1}, {0, 2},
    {-1, -1}, {1, -1}, {-1, 1}, {1, 1},
}};

/// Slot of an offset in kOffsets; throws std::out_of_range for offsets outside
/// the supported shape.
std::size_t offset_slot(int di, int dj);

/// Coefficients over kOffsets. Arithmetic is linear, so stencils built from
/// difference operators can be combined freely.
class Stencil {
public:
    constexpr Stencil() = default;

    static Stencil unit(int di, int dj);

    double operator[](std::size_t slot) const noexcept { return c_[slot]; }
    double& operator[](std::size_t slot) noexcept { return c_[slot]; }
    double at(int di, int dj) const { return c_[offset_slot(di, dj)]; }
    double& at(int di, int dj) { return c_[offset_slot(di, dj)]; }

    double sum() const noexcept;
    bool has_diagonal_terms() const noexcept;

    Stencil& operator+=(const Stencil& o) noexcept;
    Stencil& operator-=(const Stencil& o) noexcept;
    Stencil& operator*=(double s) noexcept;
    friend Stencil operator+(Stencil a, const Stencil& b) noexcept { return a += b; }
    friend Stencil operator-(Stencil a, const Stencil& b) noexcept { return a -= b; }
    friend Stencil operator*(double s, Stencil a) noexcept { return a *= s; }
    friend bool operator==(const Stencil&, const Stencil&) = default;

private:
    std::array<double, kOffsets.size()> c_{};
};

/// One node of the general scheme
///   U^{n+1}_p + sum_q alpha_q U^{n+1}_{p+q} = U^n_p + sum_q beta_q U^n_{p+q}.
/// `implicit_part` holds alpha (including alpha_0), `explicit_part` holds beta.
struct StencilRow {
    Stencil implicit_part;
    Stencil explicit_part;

    double diagonal() const noexcept { return 1.0 + implicit_part[0]; }

    StencilRow& operator+=(const StencilRow& o) noexcept {
        implicit_part += o.implicit_part;
        explicit_part += o.explicit_part;
        return *this;
    }
    friend StencilRow operator+(StencilRow a, const StencilRow& b) noexcept { return a += b; }
    friend StencilRow operator*(double s, StencilRow a) noexcept {
        a.implicit_part *= s;
        a.explicit_part *= s;
        return a;
    }
    friend bool operator==(const StencilRow&, const StencilRow&) = default;
};

/// The linear system of one time step. Dirichlet rows carry zero stencils so
/// their equation reads U_p = rhs_p. Contributions of out-of-grid (ghost) nodes
/// are already folded into `rhs`; solvers skip implicit coefficients that point
/// outside the grid.
struct StencilSystem {
    Grid grid;
    std::vector<StencilRow> rows;
    std::vector<double> rhs;

    explicit StencilSystem(const Grid& g) : grid(g), rows(g.size()), rhs(g.size(), 0.0) {}

    std::size_t size() const noexcept { return rows.size(); }
    /// max_p |rhs_p - (A x)_p|
    double residual(std::span<const double> x) const;
};

/// Debug dump `i[,j],alpha[..],beta[..],rhs` for cross-implementation diffing.
/// 1D systems emit offsets -2..2; 2D systems add the y-axis and corner columns.
void write_stencil_csv(std::ostream& out, const StencilSystem& system);

} // namespace kadv
