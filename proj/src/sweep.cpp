#include "spinpair/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

namespace spinpair {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_cfg(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("sweep config: ") + name + " must be finite");
    }
}

// "min:max:steps" with steps a positive integer
void parse_range_token(const std::string& flag, const std::string& token, double& out_min,
                       double& out_max, std::size_t& out_steps) {
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument(flag + ": " + why + " in '" + token + "'");
    };
    const auto c1 = token.find(':');
    const auto c2 = token.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        token.find(':', c2 + 1) != std::string::npos) {
        fail("expected min:max:steps");
    }
    const std::string parts[3] = {token.substr(0, c1), token.substr(c1 + 1, c2 - c1 - 1),
                                  token.substr(c2 + 1)};
    double vals[2];
    for (int i = 0; i < 2; ++i) {
        char* end = nullptr;
        vals[i] = std::strtod(parts[i].c_str(), &end);
        if (parts[i].empty() || end != parts[i].c_str() + parts[i].size() ||
            !std::isfinite(vals[i])) {
            fail("bad number '" + parts[i] + "'");
        }
    }
    char* end = nullptr;
    const unsigned long steps = std::strtoul(parts[2].c_str(), &end, 10);
    if (parts[2].empty() || end != parts[2].c_str() + parts[2].size() || steps == 0) {
        fail("bad step count '" + parts[2] + "'");
    }
    if (vals[0] > vals[1]) fail("min > max");
    out_min = vals[0];
    out_max = vals[1];
    out_steps = static_cast<std::size_t>(steps);
}

OutputFormat parse_format_token(const std::string& token) {
    if (token == "csv") return OutputFormat::csv;
    if (token == "json") return OutputFormat::json;
    throw std::invalid_argument("--format: expected csv or json, got '" + token + "'");
}

void apply_json_config(SweepConfig& cfg, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("config file: ") + ex.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config file: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "b_min") cfg.b_min = value.get<double>();
            else if (key == "b_max") cfg.b_max = value.get<double>();
            else if (key == "b_steps") cfg.b_steps = value.get<std::size_t>();
            else if (key == "theta_min") cfg.theta_min = value.get<double>();
            else if (key == "theta_max") cfg.theta_max = value.get<double>();
            else if (key == "theta_steps") cfg.theta_steps = value.get<std::size_t>();
            else if (key == "temperatures") cfg.temperatures = value.get<std::vector<double>>();
            else if (key == "j_coupling") cfg.j_coupling = value.get<double>();
            else if (key == "output") cfg.output_path = value.get<std::string>();
            else if (key == "format") cfg.output_format = parse_format_token(value.get<std::string>());
            else if (key == "prominence") cfg.min_prominence = value.get<double>();
            else if (key == "threads") cfg.threads = value.get<unsigned>();
            else throw std::invalid_argument("config file: unknown key '" + key + "'");
        } catch (const nlohmann::json::exception& ex) {
            throw std::invalid_argument("config file: bad value for '" + key + "': " + ex.what());
        }
    }
}

}  // namespace

void SweepConfig::validate() const {
    require_finite_cfg(b_min, "b_min");
    require_finite_cfg(b_max, "b_max");
    require_finite_cfg(theta_min, "theta_min");
    require_finite_cfg(theta_max, "theta_max");
    require_finite_cfg(j_coupling, "j_coupling");
    require_finite_cfg(min_prominence, "prominence");
    if (b_min > b_max) throw std::invalid_argument("sweep config: b_min > b_max");
    if (theta_min > theta_max) throw std::invalid_argument("sweep config: theta_min > theta_max");
    if (b_steps == 0 || theta_steps == 0) {
        throw std::invalid_argument("sweep config: step counts must be positive");
    }
    if (temperatures.empty()) throw std::invalid_argument("sweep config: no temperatures");
    for (double t : temperatures) {
        if (!std::isfinite(t) || t <= 0.0) {
            throw std::invalid_argument("sweep config: temperatures must be positive, got " +
                                        std::to_string(t));
        }
    }
    if (!(j_coupling > 0.0)) throw std::invalid_argument("sweep config: j_coupling must be positive");
    if (min_prominence < 0.0) throw std::invalid_argument("sweep config: prominence must be >= 0");
    if (output_path.empty()) throw std::invalid_argument("sweep config: empty output path");
}

SweepConfig SweepConfig::fig1() {
    SweepConfig cfg;
    cfg.output_path = "fig1.csv";
    return cfg;
}

SweepConfig SweepConfig::fig2() {
    SweepConfig cfg;
    cfg.b_min = -3.0;
    cfg.b_max = 3.0;
    cfg.b_steps = 601;  // step 0.01
    cfg.theta_min = kPi / 4.0;
    cfg.theta_max = 3.0 * kPi / 4.0;
    cfg.theta_steps = 2;
    cfg.output_path = "fig2.csv";
    return cfg;
}

std::vector<double> linspace(double min, double max, std::size_t steps) {
    if (steps == 0) throw std::invalid_argument("linspace: steps must be positive");
    std::vector<double> out(steps);
    if (steps == 1) {
        out[0] = min;
        return out;
    }
    const double h = (max - min) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) out[i] = min + static_cast<double>(i) * h;
    out.back() = max;
    return out;
}

SweepConfig parse_config(const std::vector<std::string>& args,
                         const std::optional<std::string>& file_json) {
    return parse_config_over(SweepConfig{}, args, file_json);
}

SweepConfig parse_config_over(SweepConfig base, const std::vector<std::string>& args,
                              const std::optional<std::string>& file_json) {
    CLI::App app{"negativity sweep"};
    std::string b_range, theta_range, format_token, output_path, config_path;
    std::vector<double> temperatures;
    double theta_single = 0.0, temp_single = 0.0, prominence = 0.0;
    unsigned threads = 0;

    app.add_option("--b-range", b_range, "field grid as min:max:steps, endpoints included");
    auto* opt_trange =
        app.add_option("--theta-range", theta_range, "angle grid as min:max:steps");
    auto* opt_theta = app.add_option("--theta", theta_single, "single angle");
    opt_theta->excludes(opt_trange);
    auto* opt_temps = app.add_option("--temperatures", temperatures, "temperature list t1,t2,...")
                          ->delimiter(',');
    auto* opt_temp = app.add_option("--temperature", temp_single, "single temperature");
    opt_temp->excludes(opt_temps);
    app.add_option("--output", output_path, "output file path");
    app.add_option("--format", format_token, "csv or json");
    app.add_option("--prominence", prominence, "peak prominence threshold");
    app.add_option("--threads", threads, "worker threads, 0 = auto");
    app.add_option("--config", config_path, "JSON config file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& ex) {
        throw std::invalid_argument(std::string("sweep flags: ") + ex.what());
    }

    if (file_json) apply_json_config(base, *file_json);
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("config file: cannot read '" + config_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        apply_json_config(base, buf.str());
    }

    if (app.count("--b-range")) {
        parse_range_token("--b-range", b_range, base.b_min, base.b_max, base.b_steps);
    }
    if (app.count("--theta-range")) {
        parse_range_token("--theta-range", theta_range, base.theta_min, base.theta_max,
                          base.theta_steps);
    }
    if (app.count("--theta")) {
        base.theta_min = theta_single;
        base.theta_max = theta_single;
        base.theta_steps = 1;
    }
    if (app.count("--temperatures")) base.temperatures = temperatures;
    if (app.count("--temperature")) base.temperatures = {temp_single};
    if (app.count("--output")) base.output_path = output_path;
    if (app.count("--format")) base.output_format = parse_format_token(format_token);
    if (app.count("--prominence")) base.min_prominence = prominence;
    if (app.count("--threads")) base.threads = threads;

    base.validate();
    return base;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<double> bs = linspace(cfg.b_min, cfg.b_max, cfg.b_steps);
    const std::vector<double> ths = linspace(cfg.theta_min, cfg.theta_max, cfg.theta_steps);
    const std::vector<double>& ts = cfg.temperatures;
    const std::size_t nb = bs.size();
    const std::size_t nth = ths.size();
    const std::size_t total = nb * nth * ts.size();
    std::vector<SweepRecord> records(total);

    auto eval_point = [&](std::size_t idx) {
        const std::size_t bi = idx % nb;
        const std::size_t thi = (idx / nb) % nth;
        const std::size_t ti = idx / (nb * nth);
        ModelParams p{cfg.j_coupling, bs[bi], ths[thi]};
        try {
            // rho comes straight out of gibbs_state here, so the state gate
            // is redundant per point
            const NegativityResult res = thermal_negativity(p, ts[ti], false).second;
            records[idx] = SweepRecord{bs[bi], ths[thi], ts[ti], res.negativity};
        } catch (const std::exception& ex) {
            throw std::runtime_error("sweep point failed at b=" + std::to_string(bs[bi]) +
                                     " theta=" + std::to_string(ths[thi]) + " T=" +
                                     std::to_string(ts[ti]) + ": " + ex.what());
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (static_cast<std::size_t>(threads) > total) threads = static_cast<unsigned>(total);

    if (threads <= 1 || total < 512) {
        for (std::size_t i = 0; i < total; ++i) eval_point(i);
        return records;
    }

    const std::size_t chunk = (total + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::size_t> error_index(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back([&, k]() {
            const std::size_t lo = static_cast<std::size_t>(k) * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
                try {
                    eval_point(i);
                } catch (...) {
                    errors[k] = std::current_exception();
                    error_index[k] = i;
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    std::size_t first = total;
    std::size_t who = threads;
    for (unsigned k = 0; k < threads; ++k) {
        if (errors[k] && error_index[k] < first) {
            first = error_index[k];
            who = k;
        }
    }
    if (who < threads) std::rethrow_exception(errors[who]);
    return records;
}

namespace {

// Scientific notation with a 12-digit mantissa and a compact exponent:
// 0.05 -> "5.000000000000e-2", 0 -> "0.000000000000e0".
std::string format_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", x);
    const std::string s(buf);
    const auto e = s.find('e');
    const int exponent = std::atoi(s.c_str() + e + 1);
    return s.substr(0, e) + "e" + std::to_string(exponent);
}

}  // namespace

std::string format_records_csv(const std::vector<SweepRecord>& records) {
    std::string out = "b,theta,temperature,negativity\n";
    for (const SweepRecord& r : records) {
        out += format_sci(r.b_field);
        out += ',';
        out += format_sci(r.theta);
        out += ',';
        out += format_sci(r.t_temp);
        out += ',';
        out += format_sci(r.negativity);
        out += '\n';
    }
    return out;
}

std::string format_records_json(const std::vector<SweepRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) {
        arr.push_back({{"b", r.b_field},
                       {"theta", r.theta},
                       {"temperature", r.t_temp},
                       {"negativity", r.negativity}});
    }
    return arr.dump(2) + "\n";
}

std::vector<SweepRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "b,theta,temperature,negativity") {
        throw std::invalid_argument("records csv: missing header");
    }
    std::vector<SweepRecord> records;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double vals[4];
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t comma = line.find(',', pos);
            const bool last = (f == 3);
            if (last != (comma == std::string::npos)) {
                throw std::invalid_argument("records csv: wrong field count on line " +
                                            std::to_string(lineno));
            }
            const std::string tok =
                line.substr(pos, last ? std::string::npos : comma - pos);
            char* end = nullptr;
            vals[f] = std::strtod(tok.c_str(), &end);
            if (tok.empty() || end != tok.c_str() + tok.size()) {
                throw std::invalid_argument("records csv: bad number '" + tok + "' on line " +
                                            std::to_string(lineno));
            }
            pos = last ? pos : comma + 1;
        }
        records.push_back(SweepRecord{vals[0], vals[1], vals[2], vals[3]});
    }
    return records;
}

void emit(const std::vector<SweepRecord>& records, const SweepConfig& cfg) {
    if (records.empty()) throw std::invalid_argument("emit: no records");
    const std::string body = cfg.output_format == OutputFormat::csv
                                 ? format_records_csv(records)
                                 : format_records_json(records);
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("emit: cannot open '" + cfg.output_path + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw std::runtime_error("emit: write to '" + cfg.output_path + "' failed");
}

PeakReport detect_peaks(const std::vector<std::pair<double, double>>& curve,
                        double min_prominence, std::string curve_id) {
    if (curve.size() < 3) {
        throw std::invalid_argument("detect_peaks: need at least 3 samples, got " +
                                    std::to_string(curve.size()));
    }
    if (!std::isfinite(min_prominence) || min_prominence < 0.0) {
        throw std::invalid_argument("detect_peaks: prominence must be >= 0");
    }
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (!(curve[i - 1].first < curve[i].first)) {
            throw std::invalid_argument("detect_peaks: curve must be sorted by strictly "
                                        "increasing b");
        }
    }
    PeakReport report;
    report.curve_id = std::move(curve_id);
    const std::size_t n = curve.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h = curve[i].second;
        if (!(h > curve[i - 1].second && h > curve[i + 1].second)) continue;
        // walk outward until a higher sample (or the edge); the minima seen
        // on the way bound the peak's prominence
        double left_min = h;
        for (std::size_t j = i; j-- > 0;) {
            if (curve[j].second > h) break;
            left_min = std::min(left_min, curve[j].second);
        }
        double right_min = h;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (curve[j].second > h) break;
            right_min = std::min(right_min, curve[j].second);
        }
        const double prominence = h - std::max(left_min, right_min);
        if (prominence > min_prominence) {
            report.peak_locations.push_back(curve[i].first);
            report.peak_heights.push_back(h);
        }
    }
    return report;
}

FieldComparison compare_field_directions(double b, double t_temp) {
    FieldComparison out;
    out.parallel = thermal_negativity(ModelParams{1.0, b, kPi / 4.0}, t_temp).second.negativity;
    out.antiparallel =
        thermal_negativity(ModelParams{1.0, b, 3.0 * kPi / 4.0}, t_temp).second.negativity;
    return out;
}

}  // namespace spinpair
