#pragma once

#include "kadv/assembly.hpp"
#include "kadv/kappa.hpp"
#include "kadv/stencil.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kadv {

/// A scheme as seen by the von Neumann analysis: its kind plus dimension.
struct SchemeId {
    SchemeKind kind = SchemeKind::semi_implicit;
    int dims = 1;
    CtuChoice ctu{};

    /// explicit, implicit, si1d, si-b, si2d, ctu-a, ctu-b, ctu-blend.
    static SchemeId parse(std::string_view name, double theta = 0.5);
    std::string name() const;
};

/// Constant-coefficient stencil of one scheme instance. Offsets double as
/// Fourier exponents, including the diagonal ones used by CTU.
struct FourierSymbol {
    SchemeId scheme;
    double c = 0.0;
    double d = 0.0;
    double kappa_x = 0.0;
    double kappa_y = 0.0;
    StencilRow row;
};

FourierSymbol symbol(const SchemeId& scheme, double c, double d, double kappa_x, double kappa_y);

/// kappa numbers the strategy yields for constant (C, D).
std::pair<double, double> resolve_kappa(const KappaStrategy& strategy, double c, double d);

/// S = (1 + sum beta_q e^{i q.theta}) / (1 + sum alpha_q e^{i q.theta}).
/// A vanishing denominator yields an infinite modulus.
std::complex<double> amplification(const FourierSymbol& sym, double theta_x, double theta_y = 0.0);

struct ScanOptions {
    /// Points per theta axis; 0 selects 512 (1D) or 256 (2D).
    int resolution = 0;
    bool refine = true;
    int refine_starts = 8;
    int refine_budget = 200;
    double tolerance = 1e-9;
};

struct StabilityReport {
    std::string scheme;
    double c = 0.0;
    double d = 0.0;
    double kappa_x = 0.0;
    double kappa_y = 0.0;
    double max_abs_s = 1.0;
    double theta_x = 0.0;
    double theta_y = 0.0;
    int resolution = 0;
    int refine_evaluations = 0;
    double scanned_max = 1.0;
    bool stable = true;
};

/// Dense scan of |S| over theta in [-pi, pi) per axis, then coordinate search
/// from the best scan points.
StabilityReport max_amplification(const FourierSymbol& sym, const ScanOptions& options = {});

StabilityReport max_amplification(const SchemeId& scheme, double c, double d, double kappa_x,
                                  double kappa_y, const ScanOptions& options = {});

/// Maximum of |S| over all 0 <= C <= c_max, 0 <= D <= d_max with kappa given by
/// the strategy at each (C, D), and over all wavenumbers. `param_points` per
/// Courant axis seeds a joint refinement in (C, D, theta).
StabilityReport max_amplification_box(const SchemeId& scheme, const KappaStrategy& strategy,
                                      double c_max, double d_max, int param_points = 33,
                                      const ScanOptions& options = {});

struct RegionSpec {
    SchemeId scheme;
    std::vector<double> c_values;
    std::vector<double> d_values{0.0};
    /// When set, kappa follows (C, D) via the strategy and the kappa lists are ignored.
    std::optional<KappaStrategy> strategy;
    std::vector<double> kappa_x_values{0.0};
    std::vector<double> kappa_y_values{0.0};
    ScanOptions scan;
};

std::vector<StabilityReport> stability_region(const RegionSpec& region);

/// `scheme,C,D,kappa_x,kappa_y,max_abs_S,theta_x,theta_y,verdict`
void write_region_csv(std::ostream& out, const std::vector<StabilityReport>& reports);

struct ClaimResult {
    std::string id;
    std::string description;
    bool passed = false;
    std::string detail;
};

/// The numerically indicated stability statements for the constant-coefficient
/// symbols, each evaluated on a finite parameter sample.
std::vector<ClaimResult> run_stability_claims(const ScanOptions& options = {});

} // namespace kadv
