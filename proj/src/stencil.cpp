#include "kadv/stencil.hpp"

#include "kadv/csv.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace kadv {

namespace {

constexpr std::array<int, 25> build_slot_table() {
    std::array<int, 25> t{};
    for (auto& v : t) v = -1;
    for (std::size_t s = 0; s < kOffsets.size(); ++s)
        t[(kOffsets[s].dj + 2) * 5 + (kOffsets[s].di + 2)] = static_cast<int>(s);
    return t;
}

constexpr auto kSlotTable = build_slot_table();

std::string offset_label(const Offset& o) {
    return "(" + std::to_string(o.di) + ";" + std::to_string(o.dj) + ")";
}

} // namespace

std::size_t offset_slot(int di, int dj) {
    if (di < -2 || di > 2 || dj < -2 || dj > 2 || kSlotTable[(dj + 2) * 5 + (di + 2)] < 0) {
        throw std::out_of_range("offset (" + std::to_string(di) + "," + std::to_string(dj) +
                                ") is outside the supported stencil shape");
    }
    return static_cast<std::size_t>(kSlotTable[(dj + 2) * 5 + (di + 2)]);
}

Stencil Stencil::unit(int di, int dj) {
    Stencil s;
    s.at(di, dj) = 1.0;
    return s;
}

double Stencil::sum() const noexcept {
    double s = 0.0;
    for (double v : c_) s += v;
    return s;
}

bool Stencil::has_diagonal_terms() const noexcept {
    for (std::size_t s = 0; s < kOffsets.size(); ++s)
        if (kOffsets[s].di != 0 && kOffsets[s].dj != 0 && c_[s] != 0.0) return true;
    return false;
}

Stencil& Stencil::operator+=(const Stencil& o) noexcept {
    for (std::size_t s = 0; s < c_.size(); ++s) c_[s] += o.c_[s];
    return *this;
}

Stencil& Stencil::operator-=(const Stencil& o) noexcept {
    for (std::size_t s = 0; s < c_.size(); ++s) c_[s] -= o.c_[s];
    return *this;
}

Stencil& Stencil::operator*=(double f) noexcept {
    for (double& v : c_) v *= f;
    return *this;
}

double StencilSystem::residual(std::span<const double> x) const {
    double r = 0.0;
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const auto p = grid.index(i, j);
            const Stencil& a = rows[p].implicit_part;
            double ax = x[p];
            for (std::size_t s = 0; s < kOffsets.size(); ++s) {
                if (a[s] == 0.0) continue;
                const int ii = i + kOffsets[s].di, jj = j + kOffsets[s].dj;
                if (grid.contains(ii, jj)) ax += a[s] * x[grid.index(ii, jj)];
            }
            const double d = std::abs(rhs[p] - ax);
            if (!(d <= r)) r = d;  // lets NaN through

        }
    }
    return r;
}

void write_stencil_csv(std::ostream& out, const StencilSystem& system) {
    const Grid& g = system.grid;
    std::vector<std::size_t> slots;
    if (g.dims() == 1) {
        for (int di = -2; di <= 2; ++di) slots.push_back(offset_slot(di, 0));
    } else {
        for (std::size_t s = 0; s < kOffsets.size(); ++s) slots.push_back(s);
    }
    auto label = [&](std::size_t s) {
        return g.dims() == 2 ? offset_label(kOffsets[s]) : "[" + std::to_string(kOffsets[s].di) + "]";
    };

    out << (g.dims() == 2 ? "i,j" : "i");
    for (auto s : slots) {
        out << ",alpha" << label(s);
    }
    for (auto s : slots) {
        out << ",beta" << label(s);
    }
    out << ",rhs\n";
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            const auto p = g.index(i, j);
            out << i;
            if (g.dims() == 2) out << ',' << j;
            for (auto s : slots) out << ',' << csv::num(system.rows[p].implicit_part[s]);
            for (auto s : slots) out << ',' << csv::num(system.rows[p].explicit_part[s]);
            out << ',' << csv::num(system.rhs[p]) << '\n';
        }
    }
}

} // namespace kadv
