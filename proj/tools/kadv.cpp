// kadv: command-line front end for the advection schemes, the stability scans
// and the benchmark suites.
//
// Exit codes: 0 success, 1 instability detected with --fail-on-instability,
// 2 configuration error, 3 unexpected runtime failure.

#include "cli_config.hpp"

#include "kadv/assembly.hpp"
#include "kadv/bench.hpp"
#include "kadv/csv.hpp"
#include "kadv/stability.hpp"
#include "kadv/stepper.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace kadv;
using kadv::cli::ConfigError;

namespace {

constexpr int kExitUnstable = 1;
constexpr int kExitConfig = 2;
constexpr int kExitFailure = 3;

struct SolverArgs {
    int max_sweeps = 3;
    double rtol = 1e-12;

    void add(CLI::App* app) {
        app->add_option("--max-sweeps", max_sweeps, "fast-sweeping cap (full sweeps)");
        app->add_option("--rtol", rtol, "relative residual tolerance");
    }
    SolverOptions options() const {
        if (max_sweeps < 1) throw ConfigError("--max-sweeps must be at least 1");
        if (!(rtol >= 0.0)) throw ConfigError("--rtol must be non-negative");
        return {max_sweeps, rtol};
    }
};

struct SchemeArgs {
    std::string scheme = "si";
    std::string kappa = "k3";
    double theta = 1.0;
    std::string override_mode = "none";

    void add(CLI::App* app) {
        app->add_option("--scheme", scheme,
                        "explicit, implicit, si, si-b, ctu-a, ctu-b or ctu-blend");
        app->add_option("--kappa", kappa,
                        "kp, km, k0, k3, third-explicit, third-implicit, const:<k>[,<ky>]");
        app->add_option("--theta", theta, "CTU blend weight of variant A");
        app->add_option("--override", override_mode, "boundary kappa: none, upwind or literal");
    }
    SchemeSpec spec(int dims) const {
        SchemeSpec s = SchemeSpec::parse(scheme, kappa, theta);
        s.boundary_override = parse_boundary_override(override_mode);
        s.validate(dims);
        return s;
    }
};

/// A single configured simulation: grid, problem, profile and step count.
struct ProblemArgs {
    std::string problem = "translation";
    std::string profile = "cubic";
    int dims = 2;
    int m = 40;
    int n = 100;
    double t_end = 1.0;
    double v = 0.8;
    double w = 0.9;
    std::uint64_t seed = 0;

    void add(CLI::App* app) {
        app->add_option("--problem", problem, "translation, rotation or vortex");
        app->add_option("--profile", profile, "initial profile");
        app->add_option("--dims", dims, "1 or 2");
        app->add_option("--M", m, "grid intervals per axis");
        app->add_option("--N", n, "time steps");
        app->add_option("--t-end", t_end, "final time (translation, vortex)");
        app->add_option("--v", v, "translation velocity, x component");
        app->add_option("--w", w, "translation velocity, y component");
        app->add_option("--seed", seed, "seed for random polynomial profiles");
    }
    BenchmarkSetup setup() const {
        if (dims != 1 && dims != 2) throw ConfigError("--dims must be 1 or 2");
        if (n < 1) throw ConfigError("--N must be positive");
        if (problem == "translation") {
            return translation_setup(make_profile(profile, seed), m, n, v, dims == 1 ? 0.0 : w,
                                     t_end, dims);
        }
        if (dims != 2) throw ConfigError("the " + problem + " problem is two-dimensional");
        if (problem == "rotation") return rotation_setup(make_profile(profile, seed), m, n);
        if (problem == "vortex") return vortex_setup(m, n, t_end);
        throw ConfigError("unknown problem '" + problem + "'");
    }
};

fs::path prepare_out(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
    return p;
}

std::ofstream open_csv(const fs::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    return out;
}

// --- run -------------------------------------------------------------------

struct RunCommand {
    SchemeArgs scheme;
    ProblemArgs problem;
    SolverArgs solver;
    std::string out = ".";
    bool fail_on_instability = false;
    bool dump_field = false;
    CLI::App* app = nullptr;

    void add(CLI::App& root) {
        app = root.add_subcommand("run", "advance one configured problem and report its error");
        scheme.add(app);
        problem.add(app);
        solver.add(app);
        app->add_option("--out", out, "output directory");
        app->add_flag("--fail-on-instability", fail_on_instability, "exit 1 on non-finite values");
        app->add_flag("--dump-field", dump_field, "write the final field as CSV");
    }

    int execute() const {
        const auto spec = scheme.spec(problem.dims);
        const auto setup = problem.setup();
        const auto options = solver.options();
        const auto dir = prepare_out(out);
        cli::write_config_echo(*app, dir / "run.config");

        ErrorReport rep = run_benchmark(setup, spec, options);
        rep.suite = setup.suite;
        rep.scheme = spec.scheme_name();
        rep.kappa = spec.kappa.label();
        rep.m = problem.m;
        rep.n = setup.steps;

        auto log = open_csv(dir / "run_log.csv");
        write_run_log_csv(log, rep.step_log);
        auto result = open_csv(dir / "result.csv");
        write_results_csv(result, {rep});
        if (dump_field && rep.final_state) {
            auto field = open_csv(dir / "final_field.csv");
            write_field_csv(field, *rep.final_state);
        }

        std::cout << spec.label() << ' ' << setup.suite << " M=" << rep.m << " N=" << rep.n;
        if (setup.exact) {
            std::cout << "  E=" << csv::num(rep.error) << "  max|U-u|=" << csv::num(rep.max_deviation);
        }
        std::cout << "  min=" << csv::num(rep.min_value) << "  sweeps<=" << rep.max_sweeps_used
                  << "  residual<=" << csv::num(rep.max_residual) << "  " << std::fixed
                  << std::setprecision(1) << rep.wall_ms << " ms\n";
        if (rep.unstable_step) {
            std::cout << "non-finite values at step " << *rep.unstable_step << '\n';
            if (fail_on_instability) return kExitUnstable;
        }
        return 0;
    }
};

// --- stability -------------------------------------------------------------

struct StabilityCommand {
    std::string scheme = "si2d";
    std::string kappa = "k0";
    std::optional<double> kappa_x;
    std::optional<double> kappa_y;
    double theta = 0.5;
    std::string courant;
    std::string c_values;
    std::string d_values = "0";
    bool no_box = false;
    bool claims = false;
    int resolution = 0;
    bool no_refine = false;
    int param_points = 33;
    std::string out = ".";
    bool fail_on_instability = false;
    CLI::App* app = nullptr;

    void add(CLI::App& root) {
        app = root.add_subcommand("stability", "von Neumann amplification factor scans");
        app->add_option("--scheme", scheme,
                        "explicit, implicit, si1d, si-b, si2d, ctu-a, ctu-b or ctu-blend");
        app->add_option("--kappa", kappa, "kappa strategy evaluated at each (C, D)");
        app->add_option("--kappa-x", kappa_x, "fixed kappa_x (replaces the strategy)");
        app->add_option("--kappa-y", kappa_y, "fixed kappa_y (replaces the strategy)");
        app->add_option("--theta", theta, "CTU blend weight of variant A");
        app->add_option("--courant", courant,
                        "C or C,D: the point value plus the maximum over [0,C]x[0,D]");
        app->add_option("--c-values", c_values, "region scan: comma-separated C values");
        app->add_option("--d-values", d_values, "region scan: comma-separated D values");
        app->add_flag("--no-box", no_box, "skip the box maximum for --courant");
        app->add_flag("--claims", claims, "evaluate the built-in stability statements");
        app->add_option("--resolution", resolution, "scan points per theta axis (0: default)");
        app->add_flag("--no-refine", no_refine, "dense scan only");
        app->add_option("--param-points", param_points, "box seeds per Courant axis");
        app->add_option("--out", out, "output directory");
        app->add_flag("--fail-on-instability", fail_on_instability,
                      "exit 1 when any scanned point is unstable");
    }

    ScanOptions scan() const {
        ScanOptions s;
        s.resolution = resolution;
        s.refine = !no_refine;
        return s;
    }

    std::pair<double, double> kappas(const KappaStrategy& strategy, double c, double d) const {
        auto k = resolve_kappa(strategy, c, d);
        if (kappa_x) k.first = *kappa_x;
        if (kappa_y) k.second = *kappa_y;
        return k;
    }

    static void summarize(const char* what, const StabilityReport& r) {
        std::cout << what << ' ' << r.scheme << " C=" << csv::num(r.c) << " D=" << csv::num(r.d)
                  << " kappa=(" << csv::num(r.kappa_x) << ", " << csv::num(r.kappa_y)
                  << ")  max|S|-1=" << csv::num(r.max_abs_s - 1.0) << "  "
                  << (r.stable ? "stable" : "unstable") << '\n';
    }

    int execute() const {
        const int modes = (courant.empty() ? 0 : 1) + (c_values.empty() ? 0 : 1) + (claims ? 1 : 0);
        if (modes != 1) throw ConfigError("give exactly one of --courant, --c-values or --claims");
        const auto dir = prepare_out(out);
        cli::write_config_echo(*app, dir / "stability.config");

        if (claims) {
            bool all = true;
            for (const auto& c : run_stability_claims(scan())) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << ": " << c.description
                          << " | " << c.detail << '\n';
                all = all && c.passed;
            }
            return all || !fail_on_instability ? 0 : kExitUnstable;
        }

        const SchemeId id = SchemeId::parse(scheme, theta);
        const KappaStrategy strategy = KappaStrategy::parse(kappa);
        std::vector<StabilityReport> reports;

        if (!courant.empty()) {
            const auto cd = cli::parse_double_list(courant);
            if (cd.size() > 2) throw ConfigError("--courant takes C or C,D");
            const double c = cd[0];
            const double d = cd.size() > 1 ? cd[1] : 0.0;
            if (id.dims == 1 && d != 0.0) throw ConfigError(id.name() + " is one-dimensional");
            const auto [kx, ky] = kappas(strategy, c, d);
            reports.push_back(max_amplification(id, c, d, kx, ky, scan()));
            summarize("point", reports.back());
            auto point_csv = open_csv(dir / "stability_point.csv");
            write_region_csv(point_csv, {reports.back()});
            if (!no_box) {
                if (kappa_x || kappa_y) throw ConfigError("the box maximum needs a kappa strategy; use --no-box");
                if (c < 0.0 || d < 0.0) throw ConfigError("the box maximum needs C, D >= 0; use --no-box");
                reports.push_back(
                    max_amplification_box(id, strategy, c, d, param_points, scan()));
                summarize("box  ", reports.back());
                auto box_csv = open_csv(dir / "stability_box.csv");
                write_region_csv(box_csv, {reports.back()});
            }
        } else {
            RegionSpec region;
            region.scheme = id;
            region.c_values = cli::parse_double_list(c_values);
            region.d_values = cli::parse_double_list(d_values);
            region.scan = scan();
            if (kappa_x || kappa_y) {
                region.kappa_x_values = {kappa_x.value_or(0.0)};
                region.kappa_y_values = {kappa_y.value_or(0.0)};
            } else {
                region.strategy = strategy;
            }
            reports = stability_region(region);
            auto region_csv = open_csv(dir / "stability_region.csv");
            write_region_csv(region_csv, reports);
            int unstable = 0;
            for (const auto& r : reports) unstable += r.stable ? 0 : 1;
            std::cout << reports.size() << " points, " << unstable << " unstable; table in "
                      << (dir / "stability_region.csv").string() << '\n';
        }

        for (const auto& r : reports) {
            if (!r.stable && fail_on_instability) return kExitUnstable;
        }
        return 0;
    }
};

// --- bench -----------------------------------------------------------------

std::vector<SchemeSpec> parse_scheme_list(const std::string& text, BoundaryOverride override_mode) {
    if (text == "all") return table_schemes(override_mode);
    std::vector<SchemeSpec> schemes;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("scheme list entries look like si:k3 or ctu-a:k3, got '" + item + "'");
        }
        SchemeSpec s = SchemeSpec::parse(item.substr(0, colon), item.substr(colon + 1));
        s.boundary_override = override_mode;
        schemes.push_back(s);
    }
    if (schemes.empty()) throw ConfigError("empty scheme list");
    return schemes;
}

/// Options shared by the benchmark suites.
struct SuiteArgs {
    std::string schemes = "all";
    std::string levels = "40,80,160";
    std::string override_mode = "none";
    SolverArgs solver;
    std::string out = ".";
    bool fail_on_instability = false;
    bool dump_fields = false;

    void add(CLI::App* app, const std::string& default_override) {
        override_mode = default_override;
        app->add_option("--schemes", schemes, "'all' (the five table columns) or e.g. si:k3,ctu-a:k3");
        app->add_option("--M", levels, "comma-separated grid sizes");
        app->add_option("--override", override_mode, "boundary kappa: none, upwind or literal");
        solver.add(app);
        app->add_option("--out", out, "output directory");
        app->add_flag("--fail-on-instability", fail_on_instability, "exit 1 on non-finite values");
        app->add_flag("--dump-fields", dump_fields, "write every final field as CSV");
    }
};

int finish_suite(const std::string& suite, const SuiteArgs& args, const fs::path& dir,
                 std::vector<ErrorReport>& reports) {
    auto results = open_csv(dir / ("bench_" + suite + ".csv"));
    write_results_csv(results, reports);

    std::map<std::string, std::vector<const ErrorReport*>> by_scheme;
    for (const auto& r : reports) by_scheme[r.scheme + "+" + r.kappa].push_back(&r);
    bool unstable = false;
    for (const auto& [label, rows] : by_scheme) {
        std::cout << label << '\n';
        const ErrorReport* prev = nullptr;
        for (const auto* r : rows) {
            std::cout << "  M=" << std::setw(4) << r->m << " N=" << std::setw(5) << r->n
                      << "  error=" << std::setw(24) << csv::num(r->error)
                      << "  min=" << std::setw(24) << csv::num(r->min_value);
            if (prev && prev->m * 2 == r->m && r->error > 0.0 && prev->error > 0.0) {
                std::cout << "  EOC=" << std::setprecision(3) << std::fixed
                          << std::log2(prev->error / r->error) << std::defaultfloat;
            }
            if (r->unstable_step) {
                std::cout << "  non-finite at step " << *r->unstable_step;
                unstable = true;
            }
            std::cout << '\n';
            prev = r;
        }
    }
    if (args.dump_fields) {
        for (const auto& r : reports) {
            if (!r.final_state) continue;
            auto f = open_csv(dir / (suite + "_" + r.scheme + "_" + r.kappa + "_M" +
                                     std::to_string(r.m) + ".csv"));
            write_field_csv(f, *r.final_state);
        }
    }
    std::cout << "results in " << (dir / ("bench_" + suite + ".csv")).string() << '\n';
    return unstable && args.fail_on_instability ? kExitUnstable : 0;
}

struct RotationSuite {
    SuiteArgs args;
    std::string profile = "cubic";
    std::string ratio = "5/2";
    CLI::App* app = nullptr;

    void add(CLI::App* bench) {
        app = bench->add_subcommand("rotation", "solid-body rotation on (-1,1)^2, t in [0,1]");
        args.add(app, "none");
        app->add_option("--profile", profile, "cubic, dist_euclid, dist_max, ...");
        app->add_option("--steps-per-M", ratio, "N = M * ratio, e.g. 5/2 or 1/2");
    }
    int execute() const {
        const auto schemes = parse_scheme_list(args.schemes, parse_boundary_override(args.override_mode));
        const auto levels = cli::parse_int_list(args.levels);
        const auto [p, q] = cli::parse_ratio(ratio);
        const auto options = args.solver.options();
        make_profile(profile);
        const auto dir = prepare_out(args.out);
        cli::write_config_echo(*app, dir / "bench_rotation.config");
        std::vector<ErrorReport> reports;
        for (const auto& s : schemes) {
            for (int m : levels) {
                if (m * p % q != 0) throw ConfigError("M*" + ratio + " is not an integer for M=" + std::to_string(m));
                reports.push_back(run_rotation(profile, s, m, m * p / q, options));
            }
        }
        return finish_suite("rotation", args, dir, reports);
    }
};

struct TranslationSuite {
    SuiteArgs args;
    std::string profile = "sine";
    std::string ratio = "1/2";
    int dims = 2;
    double v = 0.8;
    double w = 0.9;
    double t_end = 1.0;
    std::uint64_t seed = 0;
    CLI::App* app = nullptr;

    void add(CLI::App* bench) {
        app = bench->add_subcommand("translation", "constant-velocity translation on (-1,1)^dims");
        args.add(app, "none");
        app->add_option("--profile", profile, "initial profile");
        app->add_option("--steps-per-M", ratio, "N = M * ratio");
        app->add_option("--dims", dims, "1 or 2");
        app->add_option("--v", v, "velocity, x component");
        app->add_option("--w", w, "velocity, y component");
        app->add_option("--t-end", t_end, "final time");
        app->add_option("--seed", seed, "seed for random polynomial profiles");
    }
    int execute() const {
        if (dims != 1 && dims != 2) throw ConfigError("--dims must be 1 or 2");
        const auto schemes = parse_scheme_list(args.schemes, parse_boundary_override(args.override_mode));
        for (const auto& s : schemes) s.validate(dims);
        const auto levels = cli::parse_int_list(args.levels);
        const auto [p, q] = cli::parse_ratio(ratio);
        const auto options = args.solver.options();
        const auto shape = make_profile(profile, seed);
        const auto dir = prepare_out(args.out);
        cli::write_config_echo(*app, dir / "bench_translation.config");
        std::vector<ErrorReport> reports;
        for (const auto& s : schemes) {
            for (int m : levels) {
                if (m * p % q != 0) throw ConfigError("M*" + ratio + " is not an integer for M=" + std::to_string(m));
                auto setup = translation_setup(shape, m, m * p / q, v, dims == 1 ? 0.0 : w, t_end, dims);
                auto r = run_benchmark(setup, s, options);
                r.suite = "translation";
                r.scheme = s.scheme_name();
                r.kappa = s.kappa.label();
                r.m = m;
                r.n = setup.steps;
                reports.push_back(std::move(r));
            }
        }
        return finish_suite("translation", args, dir, reports);
    }
};

struct VortexSuite {
    SuiteArgs args;
    int m_ref = 320;
    bool full_table = false;
    CLI::App* app = nullptr;

    void add(CLI::App* bench) {
        app = bench->add_subcommand("vortex", "single vortex, t in [0,2.5], N = 5M/4, against a reference run");
        args.add(app, "upwind");
        app->add_option("--M-ref", m_ref, "reference grid (same scheme)");
        app->add_flag("--full-table", full_table,
                      "reference 1280 and M up to 320; hours of run time");
    }
    int execute() const {
        const auto schemes = parse_scheme_list(args.schemes, parse_boundary_override(args.override_mode));
        auto levels = cli::parse_int_list(args.levels);
        int reference_m = m_ref;
        if (full_table) {
            reference_m = 1280;
            levels = {40, 80, 160, 320};
            std::cerr << "warning: --full-table runs 1280x1280 reference solutions for every "
                         "scheme; expect several hours per scheme on one core\n";
        }
        for (int m : levels) {
            if (m % 4 != 0 || reference_m % m != 0) {
                throw ConfigError("vortex grids need M divisible by 4 and dividing M-ref; got M=" +
                                  std::to_string(m));
            }
        }
        const auto options = args.solver.options();
        const auto dir = prepare_out(args.out);
        cli::write_config_echo(*app, dir / "bench_vortex.config");
        std::vector<ErrorReport> reports;
        for (const auto& s : schemes) {
            std::cout << "reference " << s.label() << " at M=" << reference_m << " ..." << std::endl;
            const auto reference = vortex_solution(s, reference_m, options);
            if (reference.unstable_step) {
                std::cout << "reference run became non-finite at step " << *reference.unstable_step << '\n';
                reports.push_back(reference);
                continue;
            }
            for (int m : levels) reports.push_back(run_vortex(s, m, *reference.final_state, options));
        }
        return finish_suite("vortex", args, dir, reports);
    }
};

struct ExactnessSuite {
    SuiteArgs args;
    std::string profile = "quadratic_random";
    std::string seeds = "1,2,3";
    int n = 100;
    CLI::App* app = nullptr;

    void add(CLI::App* bench) {
        app = bench->add_subcommand("exactness",
                                    "max deviation for translated random polynomials");
        args.add(app, "none");
        args.levels = "40";
        app->add_option("--profile", profile, "quadratic_random or cubic_random");
        app->add_option("--seeds", seeds, "comma-separated seeds");
        app->add_option("--N", n, "time steps");
    }
    int execute() const {
        const auto schemes = parse_scheme_list(args.schemes, parse_boundary_override(args.override_mode));
        const auto levels = cli::parse_int_list(args.levels);
        const auto seed_list = cli::parse_int_list(seeds);
        const auto options = args.solver.options();
        if (profile != "quadratic_random" && profile != "cubic_random") {
            throw ConfigError("exactness needs quadratic_random or cubic_random");
        }
        const auto dir = prepare_out(args.out);
        cli::write_config_echo(*app, dir / "bench_exactness.config");
        auto csv_out = open_csv(dir / "bench_exactness.csv");
        csv_out << "scheme,kappa,M,N,seed,max_deviation\n";
        bool unstable = false;
        for (const auto& s : schemes) {
            for (int m : levels) {
                for (int seed : seed_list) {
                    const double dev = run_translation_exactness(profile, s, m, n, static_cast<std::uint64_t>(seed), options);
                    unstable = unstable || !std::isfinite(dev);
                    csv_out << s.scheme_name() << ',' << s.kappa.label() << ',' << m << ',' << n << ','
                            << seed << ',' << csv::num(dev) << '\n';
                    std::cout << s.label() << " M=" << m << " seed=" << seed
                              << "  max deviation " << csv::num(dev) << '\n';
                }
            }
        }
        return unstable && args.fail_on_instability ? kExitUnstable : 0;
    }
};

// --- demo-instability ------------------------------------------------------

struct DemoCommand {
    int m = 80;
    double t_end = 0.2;
    int sweeps = 1;
    std::string out = ".";
    bool fail_on_instability = false;
    CLI::App* app = nullptr;

    void add(CLI::App& root) {
        app = root.add_subcommand("demo-instability",
                                  "one Courant-16 vortex step with si2d+k3 and CTU-A+k3, and 16 small steps");
        app->add_option("--M", m, "grid intervals (multiple of 4)");
        app->add_option("--t-end", t_end, "length of the single large step");
        app->add_option("--sweeps", sweeps, "sweep cap for the si2d large step");
        app->add_option("--out", out, "output directory");
        app->add_flag("--fail-on-instability", fail_on_instability, "exit 1 when any case is flagged");
    }
    int execute() const {
        if (m % 4 != 0) throw ConfigError("--M must be a multiple of 4");
        if (sweeps < 1) throw ConfigError("--sweeps must be at least 1");
        const auto dir = prepare_out(out);
        cli::write_config_echo(*app, dir / "demo_instability.config");
        const auto demo = instability_demo(m, t_end, sweeps);

        auto summary = open_csv(dir / "demo_summary.csv");
        summary << "case,overshoot,unstable,distance_from_u0\n";
        summary << "si2d_k3_one_step," << csv::num(demo.overshoot_si2d) << ',' << demo.unstable_si2d << ",\n";
        summary << "ctu_a_k3_one_step," << csv::num(demo.overshoot_ctu) << ',' << demo.unstable_ctu << ','
                << csv::num(demo.moved_ctu) << '\n';
        summary << "si2d_k3_small_steps," << csv::num(demo.overshoot_small) << ',' << demo.unstable_small
                << ',' << csv::num(demo.moved_small) << '\n';
        for (const auto& [name, field] : {std::pair{"demo_si2d.csv", &demo.field_si2d},
                                          std::pair{"demo_ctu.csv", &demo.field_ctu},
                                          std::pair{"demo_small.csv", &demo.field_small}}) {
            auto f = open_csv(dir / name);
            write_field_csv(f, *field);
        }

        auto line = [](const char* what, double overshoot, bool flagged) {
            std::cout << what << "  overshoot " << csv::num(overshoot)
                      << (flagged ? "  UNSTABLE" : "") << '\n';
        };
        line("si2d+k3, one step, capped sweeps", demo.overshoot_si2d, demo.unstable_si2d);
        line("ctu-a+k3, one step              ", demo.overshoot_ctu, demo.unstable_ctu);
        line("si2d+k3, 16 steps               ", demo.overshoot_small, demo.unstable_small);
        const bool any = demo.unstable_si2d || demo.unstable_ctu || demo.unstable_small;
        return any && fail_on_instability ? kExitUnstable : 0;
    }
};

// --- dump-stencil ----------------------------------------------------------

struct DumpStencilCommand {
    SchemeArgs scheme;
    ProblemArgs problem;
    std::string out = ".";
    CLI::App* app = nullptr;

    void add(CLI::App& root) {
        app = root.add_subcommand("dump-stencil", "write the assembled system of the first step");
        scheme.add(app);
        problem.add(app);
        app->add_option("--out", out, "output directory");
    }
    int execute() const {
        const auto spec = scheme.spec(problem.dims);
        const auto setup = problem.setup();
        const auto dir = prepare_out(out);
        cli::write_config_echo(*app, dir / "stencil.config");
        const auto& pb = setup.problem;
        const auto courant = courant_numbers(pb.velocity, pb.tau);
        const auto system = assemble(spec, setup.initial, courant, scheme_kappa(spec, courant),
                                     pb.boundary, pb.t0, pb.tau);
        auto f = open_csv(dir / "stencil.csv");
        write_stencil_csv(f, system);
        std::cout << system.size() << " rows, max |Courant| " << csv::num(courant.max_abs())
                  << "; written to " << (dir / "stencil.csv").string() << '\n';
        return 0;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App root{"kadv: semi-implicit kappa schemes for linear advection"};
    root.option_defaults()->always_capture_default()->multi_option_policy(
        CLI::MultiOptionPolicy::TakeLast);
    root.require_subcommand(1);
    std::string config_unused;
    auto add_config = [&](CLI::App* app) {
        app->add_option("--config", config_unused, "flat key=value file; flags override its values");
    };

    RunCommand run;
    StabilityCommand stability;
    DemoCommand demo;
    DumpStencilCommand dump;
    RotationSuite rotation;
    TranslationSuite translation;
    VortexSuite vortex;
    ExactnessSuite exactness;

    run.add(root);
    stability.add(root);
    CLI::App* bench = root.add_subcommand("bench", "benchmark suites with results CSV");
    bench->require_subcommand(1);
    rotation.add(bench);
    translation.add(bench);
    vortex.add(bench);
    exactness.add(bench);
    demo.add(root);
    dump.add(root);
    for (CLI::App* app : {run.app, stability.app, demo.app, dump.app, rotation.app, translation.app,
                          vortex.app, exactness.app}) {
        add_config(app);
    }

    try {
        auto args = cli::expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        root.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return root.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return root.exit(e);
    } catch (const CLI::ParseError& e) {
        root.exit(e);
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*run.app) return run.execute();
        if (*stability.app) return stability.execute();
        if (*demo.app) return demo.execute();
        if (*dump.app) return dump.execute();
        if (*rotation.app) return rotation.execute();
        if (*translation.app) return translation.execute();
        if (*vortex.app) return vortex.execute();
        if (*exactness.app) return exactness.execute();
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitConfig;
}
