#pragma once

#include "kadv/schemes1d.hpp"
#include "kadv/stencil.hpp"

namespace kadv {

/// Dimension-by-dimension semi-implicit row: x part with (C, kappa_x) plus
/// y part with (D, kappa_y).
StencilRow semi_implicit_2d_row(NodeParams x, NodeParams y);

/// Corner Transport Upwind variants. A and B share the implicit corner term and
/// differ in the explicit corner pair; Blend is theta*A + (1-theta)*B.
enum class CtuVariant { a, b, blend };

struct CtuChoice {
    CtuVariant variant = CtuVariant::a;
    double theta = 1.0;

    /// Weight of variant A in the explicit corner part.
    double weight_a() const noexcept;
};

/// Only the corner terms. With sx = sign(C), sy = sign(D):
///   implicit  |CD|/6  (U_ij + U_{i-sx,j-sy} - U_{i-sx,j} - U_{i,j-sy})
///   explicit A +|CD|/12 (2U_ij + U_{i+sx,j+sy} + U_{i-sx,j-sy} - 4-neighbour sum)
///   explicit B -|CD|/12 (2U_ij + U_{i-sx,j+sy} + U_{i+sx,j-sy} - 4-neighbour sum)
StencilRow ctu_corner_terms(double c, double d, CtuChoice choice);

StencilRow ctu_row(NodeParams x, NodeParams y, CtuChoice choice);

} // namespace kadv
