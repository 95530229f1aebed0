// Command-line front end: negativity at a point, parameter sweeps to CSV or
// JSON, the two canned figure presets, and a self-check of the headline
// features.  Exit codes: 0 success, 1 usage or configuration error,
// 2 numerical failure, 3 self-check failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinpair/analytic.hpp"
#include "spinpair/sweep.hpp"
#include "spinpair/thermal.hpp"

namespace {

using namespace spinpair;

constexpr double kPi = std::numbers::pi;

void print_usage(std::FILE* out) {
    std::fprintf(out,
                 "usage: spinpair <command> [flags]\n"
                 "\n"
                 "commands:\n"
                 "  point   negativity of the thermal state at one (B, theta, T)\n"
                 "          --b X --theta X --temperature X [--j X]\n"
                 "  sweep   negativity over a (B, theta, T) grid\n"
                 "          [--b-range min:max:steps] [--theta-range min:max:steps]\n"
                 "          [--theta X] [--temperatures t1,t2,...] [--temperature X]\n"
                 "          [--output PATH] [--format csv|json] [--threads N]\n"
                 "          [--config FILE.json]\n"
                 "  fig1    preset: four-temperature contour grid, B in [-6,6],\n"
                 "          theta covering [0,2pi), 241x241 points\n"
                 "  fig2    preset: four-temperature field slices at theta = pi/4\n"
                 "          and 3pi/4, B in [-3,3] step 0.01\n"
                 "  check   verify the headline features of the model\n"
                 "          [--prominence X] [--threads N]\n"
                 "\n"
                 "Grids are endpoint-inclusive; steps is the number of points.\n");
}

bool wants_help(const std::vector<std::string>& args) {
    return std::any_of(args.begin(), args.end(),
                       [](const std::string& a) { return a == "-h" || a == "--help"; });
}

int run_point(const std::vector<std::string>& args) {
    CLI::App app{"negativity of the thermal state at one parameter point"};
    double b = 0.0, theta = 0.0, t_temp = 0.0, j = 1.0;
    app.add_option("--b", b, "field magnitude B")->required();
    app.add_option("--theta", theta, "field split angle")->required();
    app.add_option("--temperature", t_temp, "temperature (k_B = 1)")->required();
    app.add_option("--j", j, "exchange coupling")->capture_default_str();
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::printf("%s", app.help().c_str());
        return 0;
    } catch (const CLI::ParseError& ex) {
        std::fprintf(stderr, "point: %s\n", ex.what());
        return 1;
    }

    const ModelParams params{j, b, theta};
    try {
        params.validate();
        if (!std::isfinite(t_temp) || t_temp <= 0.0) {
            throw std::invalid_argument("temperature must be positive");
        }
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "point: %s\n", ex.what());
        return 1;
    }

    try {
        const auto [state, res] = thermal_negativity(params, t_temp);
        std::printf("b = %.12g  theta = %.12g  T = %.12g  J = %.12g\n", b, theta, t_temp, j);
        std::printf("negativity                = %.12g\n", res.negativity);
        std::printf("negativity via trace norm = %.12g\n", res.negativity_via_trace_norm);
        std::printf("trace norm of rho^T1      = %.12g\n", res.trace_norm_value);
        std::printf("negative eigenvalues      =");
        if (res.negative_eigenvalues.empty()) std::printf(" (none)");
        for (double mu : res.negative_eigenvalues) std::printf(" %.12g", mu);
        std::printf("\n");
        std::printf("partition function Z      = %.12g  (log Z = %.12g)\n", state.z, state.log_z);
        return 0;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "point: numerical failure: %s\n", ex.what());
        return 2;
    }
}

int run_sweep_command(const char* name, SweepConfig base, const std::vector<std::string>& args) {
    if (wants_help(args)) {
        print_usage(stdout);
        return 0;
    }
    SweepConfig cfg;
    try {
        cfg = parse_config_over(std::move(base), args);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "%s: %s\n", name, ex.what());
        return 1;
    }
    try {
        const auto t0 = std::chrono::steady_clock::now();
        const std::vector<SweepRecord> records = run_sweep(cfg);
        emit(records, cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s: wrote %zu records to %s (%.2f s)\n", name, records.size(),
                    cfg.output_path.c_str(), secs);
        return 0;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "%s: numerical failure: %s\n", name, ex.what());
        return 2;
    }
}

std::vector<std::pair<double, double>> slice_curve(double theta, double t_temp, double b_min,
                                                  double b_max, std::size_t steps,
                                                  unsigned threads) {
    SweepConfig cfg;
    cfg.b_min = b_min;
    cfg.b_max = b_max;
    cfg.b_steps = steps;
    cfg.theta_min = theta;
    cfg.theta_max = theta;
    cfg.theta_steps = 1;
    cfg.temperatures = {t_temp};
    cfg.threads = threads;
    const std::vector<SweepRecord> records = run_sweep(cfg);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(records.size());
    for (const SweepRecord& r : records) curve.emplace_back(r.b_field, r.negativity);
    return curve;
}

double curve_value_at(const std::vector<std::pair<double, double>>& curve, double b) {
    double best = curve.front().second;
    double dist = std::abs(curve.front().first - b);
    for (const auto& [x, n] : curve) {
        if (std::abs(x - b) < dist) {
            dist = std::abs(x - b);
            best = n;
        }
    }
    return best;
}

int run_check(const std::vector<std::string>& args) {
    CLI::App app{"verify the headline features of the model"};
    double prominence = 0.01;
    unsigned threads = 0;
    app.add_option("--prominence", prominence, "peak prominence threshold")->capture_default_str();
    app.add_option("--threads", threads, "worker threads, 0 = auto");
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::printf("%s", app.help().c_str());
        return 0;
    } catch (const CLI::ParseError& ex) {
        std::fprintf(stderr, "check: %s\n", ex.what());
        return 1;
    }

    int failures = 0;
    auto report = [&](bool ok, const std::string& text) {
        std::printf("[%s] %s\n", ok ? "ok" : "FAIL", text.c_str());
        if (!ok) ++failures;
    };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return std::string(buf);
    };

    try {
        const double par = kPi / 4.0;
        const double anti = 3.0 * kPi / 4.0;

        // parallel fields: three sharp low-T peaks collapsing to one, then none
        const auto par_cold = slice_curve(par, 0.05, -3.0, 3.0, 601, threads);
        const PeakReport p1 = detect_peaks(par_cold, prominence, "parallel T=0.05");
        report(p1.peak_locations.size() == 3,
               "parallel fields, T=0.05: three sharp peaks (found " +
                   std::to_string(p1.peak_locations.size()) + ")");
        const auto par_warm = slice_curve(par, 0.6, -3.0, 3.0, 601, threads);
        const PeakReport p2 = detect_peaks(par_warm, prominence, "parallel T=0.6");
        report(p2.peak_locations.size() == 1,
               "parallel fields, T=0.6: single central peak (found " +
                   std::to_string(p2.peak_locations.size()) + ")");
        const double par_hot_zero =
            thermal_negativity(ModelParams{1.0, 0.0, par}, 1.2).second.negativity;
        report(par_hot_zero < 0.05, "parallel fields, T=1.2: entanglement gone at B=0 (N = " +
                                        fmt(par_hot_zero) + ")");

        // antiparallel fields: single central peak splitting in two
        const auto anti_cold = slice_curve(anti, 0.05, -3.0, 3.0, 601, threads);
        const PeakReport p3 = detect_peaks(anti_cold, prominence, "antiparallel T=0.05");
        report(p3.peak_locations.size() == 1 && std::abs(p3.peak_locations.front()) <= 0.01,
               "antiparallel fields, T=0.05: one peak centered at B=0 (found " +
                   std::to_string(p3.peak_locations.size()) + ")");
        const auto anti_warm = slice_curve(anti, 0.6, -3.0, 3.0, 601, threads);
        const PeakReport p4 = detect_peaks(anti_warm, prominence, "antiparallel T=0.6");
        const double anti_warm_zero = curve_value_at(anti_warm, 0.0);
        bool split_ok = p4.peak_locations.size() == 2;
        if (split_ok) {
            split_ok = std::abs(p4.peak_locations[0] + p4.peak_locations[1]) <= 0.011 &&
                       anti_warm_zero < p4.peak_heights[0] &&
                       anti_warm_zero < p4.peak_heights[1] &&
                       anti_warm_zero < curve_value_at(anti_warm, 0.01) &&
                       anti_warm_zero < curve_value_at(anti_warm, -0.01);
        }
        report(split_ok, "antiparallel fields, T=0.6: peak splits in two around a dip at B=0 "
                         "(found " + std::to_string(p4.peak_locations.size()) + ")");
        const auto anti_hot = slice_curve(anti, 1.2, 0.0, 12.0, 1201, threads);
        const std::size_t imax = static_cast<std::size_t>(std::distance(
            anti_hot.begin(),
            std::max_element(anti_hot.begin(), anti_hot.end(),
                             [](const auto& a, const auto& b) { return a.second < b.second; })));
        const bool hot_ok = anti_hot.front().second < 0.05 && imax > 0 &&
                            imax + 1 < anti_hot.size() && anti_hot[imax].second > 0.0 &&
                            anti_hot.back().second < anti_hot[imax].second;
        report(hot_ok, "antiparallel fields, T=1.2: N(0) = " + fmt(anti_hot.front().second) +
                           ", interior maximum " + fmt(anti_hot[imax].second) + " at B = " +
                           fmt(anti_hot[imax].first) + ", then decreasing");

        // direction comparison at strong field
        const FieldComparison cold_cmp = compare_field_directions(2.0, 0.05);
        report(cold_cmp.antiparallel > cold_cmp.parallel,
               "B=2, T=0.05: antiparallel N = " + fmt(cold_cmp.antiparallel) +
                   " exceeds parallel N = " + fmt(cold_cmp.parallel));
        const std::size_t iwarm = static_cast<std::size_t>(std::distance(
            anti_warm.begin(),
            std::max_element(anti_warm.begin(), anti_warm.end(),
                             [](const auto& a, const auto& b) { return a.second < b.second; })));
        const double b_star = anti_warm[iwarm].first;
        const double n_anti = anti_warm[iwarm].second;
        const double n_par =
            thermal_negativity(ModelParams{1.0, b_star, par}, 0.6).second.negativity;
        const double ratio = n_anti / n_par;
        report(ratio >= 2.0, "T=0.6: antiparallel maximum " + fmt(n_anti) + " at B = " +
                                 fmt(b_star) + " vs parallel " + fmt(n_par) +
                                 " there, ratio = " + fmt(ratio));

        // symmetry spot checks
        double sym_dev = 0.0;
        const double pts[][3] = {{1.3, 0.4, 0.21}, {-2.7, 2.9, 0.6}, {4.2, 5.5, 1.1}};
        for (const auto& p : pts) {
            const double n0 =
                thermal_negativity(ModelParams{1.0, p[0], p[1]}, p[2]).second.negativity;
            for (const ModelParams& alt :
                 {ModelParams{1.0, -p[0], p[1]}, ModelParams{1.0, p[0], kPi / 2.0 - p[1]},
                  ModelParams{1.0, p[0], p[1] + kPi}}) {
                sym_dev = std::max(
                    sym_dev,
                    std::abs(thermal_negativity(alt, p[2]).second.negativity - n0));
            }
        }
        report(sym_dev <= 1e-10,
               "field reversal, angle mirror and angle period leave N unchanged (max dev " +
                   fmt(sym_dev) + ")");
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "check: numerical failure: %s\n", ex.what());
        return 2;
    }

    if (failures > 0) {
        std::printf("check: %d feature check(s) failed\n", failures);
        return 3;
    }
    std::printf("check: all feature checks passed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        print_usage(stderr);
        return 1;
    }
    const std::string& cmd = args.front();
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "-h" || cmd == "--help" || cmd == "help") {
        print_usage(stdout);
        return 0;
    }
    if (cmd == "point") return run_point(rest);
    if (cmd == "sweep") return run_sweep_command("sweep", SweepConfig{}, rest);
    if (cmd == "fig1") return run_sweep_command("fig1", SweepConfig::fig1(), rest);
    if (cmd == "fig2") return run_sweep_command("fig2", SweepConfig::fig2(), rest);
    if (cmd == "check") return run_check(rest);
    std::fprintf(stderr, "spinpair: unknown command '%s'\n", cmd.c_str());
    print_usage(stderr);
    return 1;
}
