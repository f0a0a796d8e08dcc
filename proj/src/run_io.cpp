#include "spinchain/run_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spinchain/oracle.hpp"
#include "spinchain/qstate.hpp"

namespace spinchain::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> Range::samples() const {
    if (step <= 0.0) throw std::invalid_argument("range step must be positive");
    if (stop < start) throw std::invalid_argument("range stop must be >= start");
    auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
}

Range parse_range(const std::string& text) {
    Range r;
    char trailing = '\0';
    std::istringstream in(text);
    char c1 = '\0', c2 = '\0';
    if (!(in >> r.start >> c1 >> r.stop >> c2 >> r.step) || c1 != ':' || c2 != ':' ||
        (in >> trailing))
        throw std::invalid_argument("range must be start:stop:step, got '" + text + "'");
    r.samples();  // validates
    return r;
}

PairSelector parse_pair(const std::string& text) {
    PairSelector p;
    char comma = '\0', trailing = '\0';
    std::istringstream in(text);
    if (!(in >> p.j >> comma >> p.j_prime) || comma != ',' || (in >> trailing))
        throw std::invalid_argument("pair must be j,j' with j in 1..8, got '" + text + "'");
    if (p.j < 1 || p.j > 8 || p.j_prime < 1 || p.j_prime > 8)
        throw std::invalid_argument("pair indices must be in 1..8");
    return p;
}

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> sizes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int n;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
        if (ec != std::errc{} || p != item.data() + item.size())
            throw std::invalid_argument("bad size list entry '" + item + "'");
        sizes.push_back(n);
    }
    if (sizes.empty()) throw std::invalid_argument("empty size list");
    return sizes;
}

std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, p};
}

std::string sha256_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 16];
    while (f.read(buf, sizeof buf) || f.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(f.gcount()));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

namespace {

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

std::string csv_series(const std::vector<double>& t, const std::vector<double>& v,
                       const std::string& header) {
    std::string out = header + "\n";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += format_double(t[i]) + "," + format_double(v[i]) + "\n";
    return out;
}

// long-format grid CSV; blank line between axis blocks (gnuplot pm3d layout)
std::string csv_grid(const SweepGrid& grid, const std::string& axis_name) {
    std::string out = axis_name + ",t,F\n";
    for (std::size_t i = 0; i < grid.axis_samples.size(); ++i) {
        if (i > 0) out += "\n";
        std::string prefix = format_double(grid.axis_samples[i]) + ",";
        for (std::size_t j = 0; j < grid.times.size(); ++j)
            out += prefix + format_double(grid.times[j]) + "," +
                   format_double(grid.at(i, j)) + "\n";
    }
    return out;
}

json params_json(const ChainParams& p) {
    return {{"n", p.n_sites}, {"gamma", p.gamma}, {"lambda", p.lambda}, {"g", p.g}};
}

json range_json(const Range& r) {
    return {{"start", r.start}, {"stop", r.stop}, {"step", r.step}};
}

json base_config_json(const RunConfig& cfg) {
    return {{"params", params_json(cfg.params)},
            {"pair", {cfg.pair.j, cfg.pair.j_prime}},
            {"out", cfg.out_dir}};
}

class Run {
  public:
    Run(const RunConfig& cfg, std::string command)
        : dir_(cfg.out_dir), command_(std::move(command)),
          start_(std::chrono::steady_clock::now()) {
        fs::create_directories(dir_);
    }

    void emit(const std::string& name, const std::string& content) {
        write_file(dir_ / name, content);
        outputs_.push_back(name);
    }

    // data files first, manifest last (renamed into place)
    void finish(const json& resolved_config) {
        json outs = json::array();
        for (const auto& name : outputs_)
            outs.push_back({{"path", name}, {"sha256", sha256_file((dir_ / name).string())}});
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_).count();
        json manifest = {{"command", command_},
                         {"resolved_config", resolved_config},
                         {"version", kVersion},
                         {"duration_seconds", secs},
                         {"outputs", outs}};
        fs::path tmp = dir_ / "manifest.json.tmp";
        write_file(tmp, manifest.dump(2) + "\n");
        fs::rename(tmp, dir_ / "manifest.json");
    }

    const fs::path& dir() const { return dir_; }

  private:
    fs::path dir_;
    std::string command_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::string> outputs_;
};

std::string gnuplot_header() {
    return "set datafile separator comma\n";
}

}  // namespace

RunConfig figure_defaults(const std::string& figure_id) {
    RunConfig cfg;
    if (figure_id == "3.1") {
        cfg.params = {101, 1.0, 1.0, 0.1};
        cfg.lambda_range = {0, 4, 0.05};
        cfg.t_range = {0, 30, 0.1};
    } else if (figure_id == "3.2") {
        cfg.params = {101, 1.0, 1.0, 0.05};
        cfg.sizes = {5, 11, 21, 41, 101};
        cfg.t_range = {0, 100, 0.1};
    } else if (figure_id == "3.3") {
        cfg.params = {101, 1.0, 1.0, 0.05};
        cfg.gamma_range = {0, 1, 0.02};
        cfg.t_range = {0, 30, 0.1};
    } else if (figure_id == "3.4-3.5") {
        cfg.params = {101, 1.0, 0.95, 0.02};
        cfg.scale_m = 4.0;
        cfg.t_range = {0, 25, 0.1};
    } else {
        throw std::invalid_argument("unknown figure id '" + figure_id +
                                    "' (expected 3.1, 3.2, 3.3 or 3.4-3.5)");
    }
    return cfg;
}

int cmd_coherence(const RunConfig& cfg) {
    cfg.params.validate();
    Run run(cfg, "coherence");
    auto series = coherence_series(cfg.params, cfg.pair, cfg.t_range.samples());
    if (cfg.format == "json") {
        json data = {{"params", params_json(cfg.params)},
                     {"pair", {cfg.pair.j, cfg.pair.j_prime}},
                     {"t", series.times},
                     {"F", series.values}};
        run.emit("coherence.json", data.dump(2) + "\n");
    } else {
        run.emit("coherence.csv", csv_series(series.times, series.values, "t,F"));
    }
    json resolved = base_config_json(cfg);
    resolved["t"] = range_json(cfg.t_range);
    resolved["format"] = cfg.format;
    run.finish(resolved);
    return 0;
}

static void figure_31_33(Run& run, const RunConfig& cfg, const std::string& id) {
    bool is_31 = id == "3.1";
    SweepAxis axis = is_31 ? SweepAxis::lambda : SweepAxis::gamma;
    const Range& axis_range = is_31 ? cfg.lambda_range : cfg.gamma_range;
    std::string axis_name = is_31 ? "lambda" : "gamma";
    auto grid = sweep(cfg.params, cfg.pair, axis, axis_range.samples(),
                      cfg.t_range.samples());
    std::string data_name = "fig" + id + "_grid.csv";
    run.emit(data_name, csv_grid(grid, axis_name));
    std::string gp = gnuplot_header();
    gp += "set pm3d map\n";
    gp += "set xlabel 't'\n";
    gp += "set ylabel '" + axis_name + "'\n";
    gp += "set cblabel '|F(t)|'\n";
    gp += "splot '" + data_name + "' skip 1 using 2:1:3 with pm3d notitle\n";
    run.emit("fig" + id + ".gp", gp);
}

static void figure_32(Run& run, const RunConfig& cfg) {
    auto scans = size_scan(cfg.params, cfg.pair, cfg.sizes, cfg.t_range.samples());
    std::string gp = gnuplot_header();
    gp += "set xlabel 't'\nset ylabel '|F(t)|'\nset key top right\nplot ";
    for (std::size_t i = 0; i < scans.size(); ++i) {
        std::string name = "fig3.2_N" + std::to_string(cfg.sizes[i]) + ".csv";
        run.emit(name, csv_series(scans[i].times, scans[i].values, "t,F"));
        if (i > 0) gp += ", \\\n     ";
        gp += "'" + name + "' skip 1 using 1:2 with lines title 'N=" +
              std::to_string(cfg.sizes[i]) + "'";
    }
    gp += "\n";
    run.emit("fig3.2.gp", gp);
}

struct ScalingModeReport {
    std::string csv_name;
    ChainParams scaled;
    double residual = 0.0;
};

static ScalingModeReport run_scaling_mode(Run& run, const RunConfig& cfg,
                                          ScalingMode mode, const std::string& stem) {
    ScalingRule rule{cfg.scale_m, mode};
    auto times = cfg.t_range.samples();
    ChainParams scaled = apply_scaling(cfg.params, 0.0, rule).first;
    std::vector<double> scaled_times(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) scaled_times[i] = rule.m * times[i];
    auto base_vals = coherence_values(cfg.params, cfg.pair, times);
    auto scaled_vals = coherence_values(scaled, cfg.pair, scaled_times);
    double residual = 0.0;
    std::string csv = "t,F_base,F_scaled\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        residual = std::max(residual, std::abs(base_vals[i] - scaled_vals[i]));
        csv += format_double(times[i]) + "," + format_double(base_vals[i]) + "," +
               format_double(scaled_vals[i]) + "\n";
    }
    std::string name = stem + ".csv";
    run.emit(name, csv);
    return {name, scaled, residual};
}

static json scaling_mode_json(const ScalingModeReport& r) {
    return {{"residual", r.residual},
            {"scaled_params", params_json(r.scaled)},
            {"curves", r.csv_name}};
}

static void figure_345(Run& run, const RunConfig& cfg) {
    auto rn = run_scaling_mode(run, cfg, ScalingMode::scale_n, "fig3.4-3.5_scale_n");
    auto rg = run_scaling_mode(run, cfg, ScalingMode::scale_gamma, "fig3.4-3.5_scale_gamma");
    json report = {{"m", cfg.scale_m},
                   {"base_params", params_json(cfg.params)},
                   {"scale_n", scaling_mode_json(rn)},
                   {"scale_gamma", scaling_mode_json(rg)}};
    run.emit("fig3.4-3.5_residuals.json", report.dump(2) + "\n");
    std::string gp = gnuplot_header();
    gp += "set xlabel 't (base)'\nset ylabel '|F|'\nset multiplot layout 1,2\n";
    gp += "set title 'scaled chain size'\n";
    gp += "plot '" + rn.csv_name + "' skip 1 using 1:2 with lines title 'base', \\\n"
          "     '" + rn.csv_name + "' skip 1 using 1:3 with lines title 'scaled'\n";
    gp += "set title 'scaled anisotropy'\n";
    gp += "plot '" + rg.csv_name + "' skip 1 using 1:2 with lines title 'base', \\\n"
          "     '" + rg.csv_name + "' skip 1 using 1:3 with lines title 'scaled'\n";
    gp += "unset multiplot\n";
    run.emit("fig3.4-3.5.gp", gp);
}

int cmd_figure(const std::string& figure_id, const RunConfig& cfg) {
    cfg.params.validate();
    Run run(cfg, "figure " + figure_id);
    json resolved = base_config_json(cfg);
    resolved["figure"] = figure_id;
    resolved["t"] = range_json(cfg.t_range);
    if (figure_id == "3.1" || figure_id == "3.3") {
        figure_31_33(run, cfg, figure_id);
        resolved[figure_id == "3.1" ? "lambda_range" : "gamma_range"] =
            range_json(figure_id == "3.1" ? cfg.lambda_range : cfg.gamma_range);
    } else if (figure_id == "3.2") {
        figure_32(run, cfg);
        resolved["sizes"] = cfg.sizes;
    } else if (figure_id == "3.4-3.5") {
        figure_345(run, cfg);
        resolved["m"] = cfg.scale_m;
    } else {
        throw std::invalid_argument("unknown figure id '" + figure_id + "'");
    }
    run.finish(resolved);
    return 0;
}

int cmd_oracle_check(const RunConfig& cfg) {
    cfg.params.validate();
    if (cfg.params.n_sites > 201)
        throw std::invalid_argument("oracle-check is limited to N <= 201");
    Run run(cfg, "oracle-check");
    auto times = cfg.t_range.samples();
    double max_diff = -1.0, argmax_t = 0.0;
    for (double t : times) {
        double analytic = coherence_factor(cfg.params, cfg.pair, t);
        if (cfg.corrupt_mode_factor) analytic += 1e-6;  // negative control
        double diff = std::abs(analytic - oracle::oracle_coherence(cfg.params, cfg.pair, t));
        if (diff > max_diff) {
            max_diff = diff;
            argmax_t = t;
        }
    }
    constexpr double tol = 1e-9;
    bool pass = max_diff < tol;
    json report = {{"max_abs_diff", max_diff},
                   {"argmax_t", argmax_t},
                   {"tolerance", tol},
                   {"pass", pass}};
    run.emit("oracle_check.json", report.dump(2) + "\n");
    json resolved = base_config_json(cfg);
    resolved["t"] = range_json(cfg.t_range);
    if (cfg.corrupt_mode_factor) resolved["corrupt_mode_factor"] = true;
    run.finish(resolved);
    return pass ? 0 : 2;
}

int cmd_scaling_check(const RunConfig& cfg) {
    cfg.params.validate();
    Run run(cfg, "scaling-check");
    auto rn = run_scaling_mode(run, cfg, ScalingMode::scale_n, "scaling_scale_n");
    auto rg = run_scaling_mode(run, cfg, ScalingMode::scale_gamma, "scaling_scale_gamma");
    json report = {{"m", cfg.scale_m},
                   {"base_params", params_json(cfg.params)},
                   {"scale_n", scaling_mode_json(rn)},
                   {"scale_gamma", scaling_mode_json(rg)}};
    run.emit("scaling_check.json", report.dump(2) + "\n");
    json resolved = base_config_json(cfg);
    resolved["t"] = range_json(cfg.t_range);
    resolved["m"] = cfg.scale_m;
    run.finish(resolved);
    return 0;
}

static CentralState make_state(const RunConfig& cfg) {
    if (cfg.preset == "ghz") return CentralState::ghz();
    if (cfg.preset == "w") return CentralState::w();
    if (cfg.preset != "custom")
        throw std::invalid_argument("state preset must be ghz, w or custom");
    if (cfg.amplitudes.size() != 16)
        throw std::invalid_argument("custom state needs 16 values (re,im per basis state)");
    CentralState s;
    for (int j = 0; j < 8; ++j)
        s.c(j) = {cfg.amplitudes[2 * j], cfg.amplitudes[2 * j + 1]};
    double norm2 = s.c.squaredNorm();
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw std::invalid_argument("amplitudes must be normalized (|norm^2 - 1| <= 1e-9)");
    s.c /= std::sqrt(norm2);
    return s;
}

int cmd_state(const RunConfig& cfg) {
    cfg.params.validate();
    Run run(cfg, "state");
    CentralState state = make_state(cfg);
    Mat8d f = coherence_matrix(cfg.params, cfg.state_time);
    EvolvedState ev = evolve_reduced(state, f);
    json rho = json::array();
    for (int i = 0; i < 8; ++i) {
        json row = json::array();
        for (int j = 0; j < 8; ++j)
            row.push_back({ev.rho(i, j).real(), ev.rho(i, j).imag()});
        rho.push_back(row);
    }
    json report = {
        {"t", cfg.state_time},
        {"rho", rho},
        {"negativity",
         {{"A", npt_negativity(ev.rho, kQubitA)},
          {"B", npt_negativity(ev.rho, kQubitB)},
          {"C", npt_negativity(ev.rho, kQubitC)}}},
        {"fidelity_vs_initial", fidelity_with_pure(ev.rho, state)},
        {"entropy_bits", von_neumann_entropy(ev.rho)},
        {"psd", {{"ok", ev.psd}, {"min_eigenvalue", ev.min_eigenvalue}}}};
    run.emit("state.json", report.dump(2) + "\n");
    json resolved = base_config_json(cfg);
    resolved["t"] = cfg.state_time;
    resolved["preset"] = cfg.preset;
    if (cfg.preset == "custom") resolved["amplitudes"] = cfg.amplitudes;
    run.finish(resolved);
    return 0;
}

}  // namespace spinchain::io
