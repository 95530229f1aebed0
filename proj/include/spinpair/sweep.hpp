#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinpair/thermal.hpp"

namespace spinpair {

enum class OutputFormat { csv, json };

// Grid semantics: `steps` points with both endpoints included (steps == 1
// collapses to {min}).  The default theta grid covers [0, 2pi) by stopping
// one step short of the period.
struct SweepConfig {
    double b_min = -6.0;
    double b_max = 6.0;
    std::size_t b_steps = 241;
    double theta_min = 0.0;
    double theta_max = 2.0 * std::numbers::pi * 240.0 / 241.0;
    std::size_t theta_steps = 241;
    std::vector<double> temperatures{0.05, 0.2, 0.6, 1.2};
    double j_coupling = 1.0;
    std::string output_path = "sweep.csv";
    OutputFormat output_format = OutputFormat::csv;
    double min_prominence = 0.01;
    unsigned threads = 0;  // 0 = pick from hardware

    void validate() const;

    static SweepConfig fig1();  // four-temperature contour grid over (B, theta)
    static SweepConfig fig2();  // four-temperature field slices at theta = pi/4 and 3pi/4
};

struct SweepRecord {
    double b_field;
    double theta;
    double t_temp;
    double negativity;
};

std::vector<double> linspace(double min, double max, std::size_t steps);

// Flag values override file values override defaults.  Args are plain
// command-line tokens (--b-range min:max:steps, --theta-range, --theta,
// --temperatures t1,t2,..., --temperature, --output, --format csv|json,
// --prominence, --threads, --config PATH); file_json is the content of a
// JSON config file with keys named like the struct fields.  Unknown flags or
// keys are errors carrying the offending token.
SweepConfig parse_config(const std::vector<std::string>& args,
                         const std::optional<std::string>& file_json = std::nullopt);

// Same, starting from an explicit base config instead of the defaults.
SweepConfig parse_config_over(SweepConfig base, const std::vector<std::string>& args,
                              const std::optional<std::string>& file_json = std::nullopt);

// One record per grid point, temperature-major, then theta, then B.  Points
// are independent, so the work may fan out over threads; results land in
// input order either way.  A failing point aborts the sweep with its
// coordinates in the error.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

std::string format_records_csv(const std::vector<SweepRecord>& records);
std::string format_records_json(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_records_csv(const std::string& text);

// Writes records to cfg.output_path in cfg.output_format.  An empty record
// list is an error and creates no file.
void emit(const std::vector<SweepRecord>& records, const SweepConfig& cfg);

struct PeakReport {
    std::string curve_id;
    std::vector<double> peak_locations;  // ascending
    std::vector<double> peak_heights;
};

// Strict local maxima of n(b), kept when their prominence (height above the
// higher of the two flanking minima) exceeds min_prominence.  The curve must
// hold at least 3 samples, sorted by strictly increasing b.
PeakReport detect_peaks(const std::vector<std::pair<double, double>>& curve,
                        double min_prominence, std::string curve_id = {});

struct FieldComparison {
    double parallel;      // N at theta = pi/4 (equal fields)
    double antiparallel;  // N at theta = 3pi/4 (opposed fields)
};
FieldComparison compare_field_directions(double b, double t_temp);

}  // namespace spinpair
