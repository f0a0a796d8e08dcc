#pragma once

#include <string>
#include <vector>

#include "spinchain/coherence.hpp"
#include "spinchain/spectrum.hpp"

namespace spinchain::io {

inline constexpr const char* kVersion = "1.0.0";

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
    std::vector<double> samples() const;  // inclusive of stop when step divides
};

Range parse_range(const std::string& text);             // "start:stop:step"
PairSelector parse_pair(const std::string& text);       // "j,j'"
std::vector<int> parse_sizes(const std::string& text);  // "5,11,21"

// Shortest decimal that round-trips binary64; CSV/regression-file stable.
std::string format_double(double v);

std::string sha256_file(const std::string& path);

struct RunConfig {
    ChainParams params;
    PairSelector pair;
    Range t_range{0, 30, 0.1};
    Range lambda_range{0, 4, 0.05};
    Range gamma_range{0, 1, 0.02};
    std::vector<int> sizes{5, 11, 21, 41, 101};
    double scale_m = 4.0;
    std::string out_dir = ".";
    std::string format = "csv";  // data format for cmd_coherence: csv|json
    std::string preset = "ghz";  // state command: ghz|w|custom
    std::vector<double> amplitudes;  // 16 reals (re,im per basis state) when custom
    double state_time = 0.0;
    bool corrupt_mode_factor = false;  // oracle-check negative-control hook
};

// Canned parameter sets per figure id ("3.1", "3.2", "3.3", "3.4-3.5");
// callers override individual fields afterwards.
RunConfig figure_defaults(const std::string& figure_id);

int cmd_coherence(const RunConfig& cfg);
int cmd_figure(const std::string& figure_id, const RunConfig& cfg);
int cmd_oracle_check(const RunConfig& cfg);   // exit 2 when the comparison fails
int cmd_scaling_check(const RunConfig& cfg);  // reports both scaling modes
int cmd_state(const RunConfig& cfg);

}  // namespace spinchain::io
