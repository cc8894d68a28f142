#include "kadv/stability.hpp"

#include "kadv/csv.hpp"
#include "kadv/schemes1d.hpp"
#include "kadv/schemes2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kadv {

using std::numbers::pi;

SchemeId SchemeId::parse(std::string_view name, double theta) {
    if (name == "explicit") return {SchemeKind::explicit_kappa, 1, {}};
    if (name == "implicit") return {SchemeKind::implicit_kappa, 1, {}};
    if (name == "si1d" || name == "si") return {SchemeKind::semi_implicit, 1, {}};
    if (name == "si-b") return {SchemeKind::semi_implicit_b, 1, {}};
    if (name == "si2d") return {SchemeKind::semi_implicit, 2, {}};
    if (name == "ctu-a" || name == "ctu") return {SchemeKind::ctu, 2, {CtuVariant::a, 1.0}};
    if (name == "ctu-b") return {SchemeKind::ctu, 2, {CtuVariant::b, 0.0}};
    if (name == "ctu-blend") return {SchemeKind::ctu, 2, {CtuVariant::blend, theta}};
    throw std::invalid_argument("unknown scheme: " + std::string(name));
}

std::string SchemeId::name() const {
    switch (kind) {
    case SchemeKind::explicit_kappa: return "explicit";
    case SchemeKind::implicit_kappa: return "implicit";
    case SchemeKind::semi_implicit: return dims == 2 ? "si2d" : "si1d";
    case SchemeKind::semi_implicit_b: return "si-b";
    case SchemeKind::ctu:
        return SchemeSpec{SchemeKind::ctu, KappaStrategy::k0(), ctu, {}}.scheme_name();
    }
    return "?";
}

FourierSymbol symbol(const SchemeId& scheme, double c, double d, double kappa_x, double kappa_y) {
    FourierSymbol sym{scheme, c, scheme.dims == 2 ? d : 0.0, kappa_x,
                      scheme.dims == 2 ? kappa_y : 0.0, {}};
    const NodeParams x{c, kappa_x};
    const NodeParams y{sym.d, sym.kappa_y};
    switch (scheme.kind) {
    case SchemeKind::explicit_kappa:
        sym.row = explicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(c, kappa_x));
        break;
    case SchemeKind::implicit_kappa:
        sym.row = implicit_kappa_row(Axis::x, AxisNeighbourhood::uniform(c, kappa_x));
        break;
    case SchemeKind::semi_implicit:
        sym.row = scheme.dims == 2 ? semi_implicit_2d_row(x, y) : semi_implicit_row(Axis::x, x);
        break;
    case SchemeKind::semi_implicit_b: sym.row = semi_implicit_b_row(Axis::x, x); break;
    case SchemeKind::ctu:
        if (scheme.dims != 2) throw std::invalid_argument("CTU symbol needs two dimensions");
        sym.row = ctu_row(x, y, scheme.ctu);
        break;
    }
    return sym;
}

std::pair<double, double> resolve_kappa(const KappaStrategy& strategy, double c, double d) {
    return {strategy.along(Axis::x, c), strategy.along(Axis::y, d)};
}

namespace {

// Nonzero (offset, coefficient) pairs of one side of the symbol.
struct Terms {
    std::vector<std::pair<Offset, double>> items;

    explicit Terms(const Stencil& s) {
        for (std::size_t k = 0; k < kOffsets.size(); ++k)
            if (s[k] != 0.0) items.emplace_back(kOffsets[k], s[k]);
    }
};

// Evaluates |S| with precomputed per-axis exponentials e^{i k theta}, k = -2..2.
class SymbolEvaluator {
public:
    explicit SymbolEvaluator(const FourierSymbol& sym)
        : num_(sym.row.explicit_part), den_(sym.row.implicit_part) {}

    double modulus(double tx, double ty) const {
        std::array<std::complex<double>, 5> ex{}, ey{};
        for (int k = -2; k <= 2; ++k) {
            ex[k + 2] = std::polar(1.0, k * tx);
            ey[k + 2] = std::polar(1.0, k * ty);
        }
        return modulus(ex, ey);
    }

    double modulus(const std::array<std::complex<double>, 5>& ex,
                   const std::array<std::complex<double>, 5>& ey) const {
        const auto num = side(num_, ex, ey);
        const auto den = side(den_, ex, ey);
        if (std::abs(den) == 0.0) return std::numeric_limits<double>::infinity();
        return std::abs(num / den);
    }

private:
    static std::complex<double> side(const Terms& t, const std::array<std::complex<double>, 5>& ex,
                                     const std::array<std::complex<double>, 5>& ey) {
        std::complex<double> s(1.0, 0.0);
        for (const auto& [o, v] : t.items) s += v * ex[o.di + 2] * ey[o.dj + 2];
        return s;
    }

    Terms num_;
    Terms den_;
};

double wrap_angle(double t) {
    t = std::remainder(t, 2.0 * pi);
    return t;
}

// Maximises f over x by coordinate search with step halving; coordinates are
// clamped to [lo, hi]. Returns the best value and updates x.
double coordinate_search(const std::function<double(const std::vector<double>&)>& f,
                         std::vector<double>& x, std::vector<double> step,
                         const std::vector<double>& lo, const std::vector<double>& hi, int budget,
                         int& evaluations) {
    double best = f(x);
    ++evaluations;
    int used = 1;
    while (used < budget) {
        bool improved = false;
        for (std::size_t k = 0; k < x.size() && used < budget; ++k) {
            for (double dir : {1.0, -1.0}) {
                if (used >= budget) break;
                std::vector<double> trial = x;
                trial[k] = std::clamp(x[k] + dir * step[k], lo[k], hi[k]);
                if (trial[k] == x[k]) continue;
                const double v = f(trial);
                ++used;
                ++evaluations;
                if (v > best) {
                    best = v;
                    x = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            bool any = false;
            for (double& s : step) {
                s *= 0.5;
                any = any || s > 1e-13;
            }
            if (!any) break;
        }
    }
    return best;
}

struct ScanPoint {
    double value;
    double tx;
    double ty;
};

std::vector<ScanPoint> scan(const SymbolEvaluator& eval, int n, int dims) {
    std::vector<std::array<std::complex<double>, 5>> table(static_cast<std::size_t>(n));
    std::vector<double> theta(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        theta[a] = -pi + 2.0 * pi * a / n;
        for (int k = -2; k <= 2; ++k) table[a][k + 2] = std::polar(1.0, k * theta[a]);
    }
    const std::array<std::complex<double>, 5> ones{1.0, 1.0, 1.0, 1.0, 1.0};
    std::vector<ScanPoint> pts;
    const int ny = dims == 2 ? n : 1;
    pts.reserve(static_cast<std::size_t>(n) * ny);
    for (int b = 0; b < ny; ++b) {
        const auto& ey = dims == 2 ? table[b] : ones;
        const double ty = dims == 2 ? theta[b] : 0.0;
        for (int a = 0; a < n; ++a) pts.push_back({eval.modulus(table[a], ey), theta[a], ty});
    }
    return pts;
}

int default_resolution(int dims, const ScanOptions& o) {
    if (o.resolution > 0) return o.resolution;
    return dims == 2 ? 256 : 512;
}

} // namespace

std::complex<double> amplification(const FourierSymbol& sym, double theta_x, double theta_y) {
    std::complex<double> num(1.0, 0.0), den(1.0, 0.0);
    for (std::size_t k = 0; k < kOffsets.size(); ++k) {
        const double phase = kOffsets[k].di * theta_x + kOffsets[k].dj * theta_y;
        const auto e = std::polar(1.0, phase);
        num += sym.row.explicit_part[k] * e;
        den += sym.row.implicit_part[k] * e;
    }
    if (std::abs(den) == 0.0) {
        const double inf = std::numeric_limits<double>::infinity();
        return {inf, inf};
    }
    return num / den;
}

StabilityReport max_amplification(const FourierSymbol& sym, const ScanOptions& options) {
    const int dims = sym.scheme.dims;
    const int n = default_resolution(dims, options);
    if (n < 64) throw std::invalid_argument("scan resolution must be at least 64 per axis");
    const SymbolEvaluator eval(sym);

    auto pts = scan(eval, n, dims);
    const std::size_t q = std::min<std::size_t>(std::max(options.refine_starts, 1), pts.size());
    std::partial_sort(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(q), pts.end(),
                      [](const ScanPoint& a, const ScanPoint& b) { return a.value > b.value; });

    StabilityReport rep;
    rep.scheme = sym.scheme.name();
    rep.c = sym.c;
    rep.d = sym.d;
    rep.kappa_x = sym.kappa_x;
    rep.kappa_y = sym.kappa_y;
    rep.resolution = n;
    rep.scanned_max = pts.front().value;
    rep.max_abs_s = pts.front().value;
    rep.theta_x = pts.front().tx;
    rep.theta_y = pts.front().ty;

    if (options.refine && std::isfinite(rep.max_abs_s)) {
        const double h = 2.0 * pi / n;
        for (std::size_t s = 0; s < q; ++s) {
            std::vector<double> x{pts[s].tx};
            if (dims == 2) x.push_back(pts[s].ty);
            const std::vector<double> lo(x.size(), -4.0 * pi), hi(x.size(), 4.0 * pi);
            auto f = [&](const std::vector<double>& v) {
                return eval.modulus(v[0], v.size() > 1 ? v[1] : 0.0);
            };
            const double best = coordinate_search(f, x, std::vector<double>(x.size(), h), lo, hi,
                                                  options.refine_budget, rep.refine_evaluations);
            if (best > rep.max_abs_s) {
                rep.max_abs_s = best;
                rep.theta_x = wrap_angle(x[0]);
                rep.theta_y = dims == 2 ? wrap_angle(x[1]) : 0.0;
            }
        }
    }
    rep.stable = rep.max_abs_s <= 1.0 + options.tolerance;
    return rep;
}

StabilityReport max_amplification(const SchemeId& scheme, double c, double d, double kappa_x,
                                  double kappa_y, const ScanOptions& options) {
    return max_amplification(symbol(scheme, c, d, kappa_x, kappa_y), options);
}

StabilityReport max_amplification_box(const SchemeId& scheme, const KappaStrategy& strategy,
                                      double c_max, double d_max, int param_points,
                                      const ScanOptions& options) {
    if (param_points < 2) throw std::invalid_argument("need at least two points per Courant axis");
    const bool two_d = scheme.dims == 2;
    const int nd = two_d ? param_points : 1;

    // Coarse pass over the parameter box.
    ScanOptions coarse = options;
    coarse.resolution = 64;
    coarse.refine = false;
    struct Candidate {
        double value, c, d;
    };
    std::vector<Candidate> cands;
    for (int a = 0; a < param_points; ++a) {
        for (int b = 0; b < nd; ++b) {
            const double c = c_max * a / (param_points - 1);
            const double d = two_d ? d_max * b / (param_points - 1) : 0.0;
            const auto [kx, ky] = resolve_kappa(strategy, c, d);
            cands.push_back({max_amplification(scheme, c, d, kx, ky, coarse).max_abs_s, c, d});
        }
    }
    const std::size_t q = std::min<std::size_t>(4, cands.size());
    std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(q), cands.end(),
                      [](const Candidate& x, const Candidate& y) { return x.value > y.value; });

    StabilityReport best;
    best.max_abs_s = -1.0;
    for (std::size_t s = 0; s < q; ++s) {
        const auto [kx, ky] = resolve_kappa(strategy, cands[s].c, cands[s].d);
        StabilityReport rep = max_amplification(scheme, cands[s].c, cands[s].d, kx, ky, options);
        if (options.refine && std::isfinite(rep.max_abs_s)) {
            // Joint search in (C, D, theta) inside the box.
            std::vector<double> x{rep.c, rep.d, rep.theta_x, rep.theta_y};
            const std::vector<double> lo{0.0, 0.0, -4.0 * pi, -4.0 * pi};
            const std::vector<double> hi{c_max, two_d ? d_max : 0.0, 4.0 * pi, 4.0 * pi};
            const double hc = c_max / (param_points - 1);
            const double hd = two_d ? d_max / (param_points - 1) : 0.0;
            const double ht = 2.0 * pi / rep.resolution;
            auto f = [&](const std::vector<double>& v) {
                const auto [a, b] = resolve_kappa(strategy, v[0], v[1]);
                return SymbolEvaluator(symbol(scheme, v[0], v[1], a, b)).modulus(v[2], v[3]);
            };
            const double val = coordinate_search(f, x, {hc, hd, ht, two_d ? ht : 0.0}, lo, hi,
                                                 options.refine_budget * 4, rep.refine_evaluations);
            if (val > rep.max_abs_s) {
                rep.max_abs_s = val;
                rep.c = x[0];
                rep.d = x[1];
                std::tie(rep.kappa_x, rep.kappa_y) = resolve_kappa(strategy, x[0], x[1]);
                rep.theta_x = wrap_angle(x[2]);
                rep.theta_y = wrap_angle(x[3]);
            }
            rep.stable = rep.max_abs_s <= 1.0 + options.tolerance;
        }
        if (rep.max_abs_s > best.max_abs_s) best = rep;
    }
    return best;
}

std::vector<StabilityReport> stability_region(const RegionSpec& region) {
    const bool two_d = region.scheme.dims == 2;
    const std::vector<double> zero{0.0};
    const auto& ds = two_d ? region.d_values : zero;
    std::vector<StabilityReport> out;
    for (double c : region.c_values) {
        for (double d : ds) {
            if (region.strategy) {
                const auto [kx, ky] = resolve_kappa(*region.strategy, c, d);
                out.push_back(max_amplification(region.scheme, c, d, kx, ky, region.scan));
                continue;
            }
            const auto& kys = two_d ? region.kappa_y_values : zero;
            for (double kx : region.kappa_x_values)
                for (double ky : kys)
                    out.push_back(max_amplification(region.scheme, c, d, kx, ky, region.scan));
        }
    }
    return out;
}

void write_region_csv(std::ostream& out, const std::vector<StabilityReport>& reports) {
    out << "scheme,C,D,kappa_x,kappa_y,max_abs_S,theta_x,theta_y,verdict\n";
    for (const auto& r : reports) {
        out << r.scheme << ',' << csv::num(r.c) << ',' << csv::num(r.d) << ','
            << csv::num(r.kappa_x) << ',' << csv::num(r.kappa_y) << ',' << csv::num(r.max_abs_s)
            << ',' << csv::num(r.theta_x) << ',' << csv::num(r.theta_y) << ','
            << (r.stable ? "stable_tol" : "unstable") << '\n';
    }
}

namespace {

std::vector<double> range(double from, double to, double step) {
    std::vector<double> v;
    const int n = static_cast<int>(std::lround((to - from) / step));
    for (int k = 0; k <= n; ++k) v.push_back(from + k * step);
    return v;
}

std::vector<double> with_negatives(const std::vector<double>& v) {
    std::vector<double> out;
    for (double x : v) {
        out.push_back(x);
        out.push_back(-x);
    }
    return out;
}

struct Tally {
    int checked = 0;
    int failed = 0;
    double worst = 0.0;
    std::string first_failure;

    void expect(bool want_stable, const StabilityReport& r) {
        ++checked;
        worst = std::max(worst, r.max_abs_s - 1.0);
        if (r.stable != want_stable) {
            if (failed == 0) {
                std::ostringstream s;
                s << "expected " << (want_stable ? "stable" : "unstable") << " at C=" << r.c
                  << " D=" << r.d << " kx=" << r.kappa_x << " ky=" << r.kappa_y
                  << " (max|S|-1=" << r.max_abs_s - 1.0 << ")";
                first_failure = s.str();
            }
            ++failed;
        }
    }

    ClaimResult result(std::string id, std::string description) const {
        std::ostringstream s;
        s << checked << " points";
        if (failed) s << ", " << failed << " failed; first: " << first_failure;
        return {std::move(id), std::move(description), failed == 0, s.str()};
    }
};

} // namespace

std::vector<ClaimResult> run_stability_claims(const ScanOptions& options) {
    std::vector<ClaimResult> out;
    const auto kappa_all = range(-1.0, 1.0, 0.1);
    auto check = [&](Tally& t, const SchemeId& id, double c, double d, double kx, double ky,
                     bool want_stable) {
        t.expect(want_stable, max_amplification(id, c, d, kx, ky, options));
    };

    {
        const auto id = SchemeId::parse("explicit");
        Tally t;
        for (double c : with_negatives(range(0.1, 1.0, 0.1)))
            for (double k : kappa_all) check(t, id, c, 0, k, 0, true);
        for (double c : {1.1, -1.1})
            for (double k : kappa_all)
                if (k * upwind_sign(c) > -1.0 + 1e-12) check(t, id, c, 0, k, 0, false);
        out.push_back(t.result("a", "explicit: stable for |C|<=1 and all kappa in [-1,1]; "
                                    "unstable at |C|=1.1 unless kappa=-sign(C)"));
    }
    {
        const auto id = SchemeId::parse("explicit");
        Tally t;
        for (double c : with_negatives(range(0.25, 2.0, 0.25)))
            check(t, id, c, 0, -upwind_sign(c), 0, true);
        for (double c : {2.2, -2.2}) check(t, id, c, 0, -upwind_sign(c), 0, false);
        out.push_back(t.result("a2", "explicit, kappa=-sign(C): stable for |C|<=2, unstable at 2.2"));
    }
    {
        const auto id = SchemeId::parse("implicit");
        Tally t;
        for (double c : {0.5, 1.0, 2.0, 5.0, 10.0, 100.0}) {
            for (double k : range(-1.0, 0.0, 0.1)) check(t, id, c, 0, k, 0, true);
            for (double k : range(0.0, 1.0, 0.1)) check(t, id, -c, 0, k, 0, true);
        }
        out.push_back(t.result("b", "implicit: kappa<=0 stable for C>=0 (and kappa>=0 for C<=0)"));
    }
    {
        const auto id = SchemeId::parse("implicit");
        Tally t;
        for (double c : range(0.0, 2.0, 0.25)) check(t, id, c, 0, 1.0 / 3.0, 0, true);
        check(t, id, 2.5, 0, 1.0 / 3.0, 0, false);
        check(t, id, 0.5, 0, 1.0, 0, false);
        check(t, id, -0.5, 0, -1.0, 0, false);
        out.push_back(t.result("b2", "implicit: kappa=1/3 stable for 0<=C<=2, unstable at 2.5; "
                                     "kappa=sign(V) unstable at |C|=0.5"));
    }
    {
        const auto id = SchemeId::parse("implicit");
        Tally t;
        for (double c : with_negatives(range(0.05, 0.5, 0.05)))
            check(t, id, c, 0, third_order_kappa(ThirdOrderVariant::implicit_scheme, c), 0, true);
        for (double c : {0.8, -0.8})
            check(t, id, c, 0, third_order_kappa(ThirdOrderVariant::implicit_scheme, c), 0, false);
        out.push_back(t.result("c", "implicit, third-order kappa: stable for |C|<=0.5, unstable at 0.8"));
    }
    {
        const auto id = SchemeId::parse("si1d");
        Tally t;
        for (double c : {0.5, 1.0, 4.0, 16.0, 100.0}) {
            for (double k : kappa_all) {
                check(t, id, c, 0, k, 0, true);
                check(t, id, -c, 0, k, 0, true);
            }
            for (double k : {-2.0, -4.0}) {
                check(t, id, c, 0, k, 0, true);
                check(t, id, -c, 0, -k, 0, true);
            }
        }
        out.push_back(t.result("d", "semi-implicit 1D: stable for kappa<=1 (V>0), kappa>=-1 (V<0)"));
    }
    {
        const auto id = SchemeId::parse("si-b");
        Tally t;
        for (double c : range(0.0, 1.0, 0.1)) {
            for (double k : kappa_all) {
                check(t, id, c, 0, k, 0, true);
                check(t, id, -c, 0, -k, 0, true);
            }
        }
        check(t, id, 1.5, 0, 0.0, 0, false);
        out.push_back(t.result("e", "variant B: stable for C in [0,1], kappa<=1; unstable at C=1.5, kappa=0"));
    }
    {
        const auto id = SchemeId::parse("si2d");
        Tally t;
        const auto cs = with_negatives({0.5, 1.0, 2.0, 4.0});
        const std::vector<double> ks{-1.0, -0.5, 0.0, 0.5, 1.0};
        for (double c : cs)
            for (double d : cs)
                for (double kx : ks)
                    for (double ky : ks) check(t, id, c, d, kx, ky, true);
        out.push_back(t.result("f", "si2d: stable for |kappa|<=1 when |C|,|D|<=4"));
    }
    {
        Tally t;
        const auto cs = with_negatives({0.5, 2.0, 8.0, 32.0});
        for (const char* name : {"ctu-a", "ctu-b", "ctu-blend"}) {
            const auto id = SchemeId::parse(name, 0.5);
            for (double c : cs) {
                for (double d : cs) {
                    const auto [kx, ky] = resolve_kappa(KappaStrategy::k3(), c, d);
                    check(t, id, c, d, kx, ky, true);
                }
            }
        }
        out.push_back(t.result("g", "CTU A, B and 0.5-blend with k3: stable for |C|,|D| up to 32"));
    }
    return out;
}

} // namespace kadv
