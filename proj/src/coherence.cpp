#include "spinchain/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinchain {

double mode_factor(const ModeData& m1, const ModeData& m2, double t) {
    if (m1.k != m2.k)
        throw std::invalid_argument("mode_factor: mismatched mode index k");
    if (t == 0.0) return 1.0;  // A=1, B=0 exactly; avoids cos^2+sin^2 rounding
    double dh = 0.5 * (m1.theta - m2.theta);
    double sh = 0.5 * (m1.theta + m2.theta);
    double wm = (m1.omega - m2.omega) * t;
    double wp = (m1.omega + m2.omega) * t;
    double cd = std::cos(dh), sd = std::sin(dh);
    double a = cd * cd * std::cos(wm) + sd * sd * std::cos(wp);
    double b = std::cos(sh) * cd * std::sin(wm) - std::sin(sh) * sd * std::sin(wp);
    return std::min(std::sqrt(a * a + b * b), 1.0);
}

double field_coherence(const ChainParams& p, double lambda_a, double lambda_b, double t) {
    p.validate();
    int m_max = (p.n_sites - 1) / 2;
    double log_prod = 0.0;
    for (int k = 1; k <= m_max; ++k) {
        double f = mode_factor(mode_data(p, lambda_a, k), mode_data(p, lambda_b, k), t);
        if (f == 0.0) return 0.0;
        log_prod += std::log(f);
    }
    return std::exp(log_prod);
}

double coherence_factor(const ChainParams& p, PairSelector pair, double t) {
    return field_coherence(p, shifted_lambda(p.lambda, p.g, pair.j),
                           shifted_lambda(p.lambda, p.g, pair.j_prime), t);
}

std::vector<double> coherence_values_serial(const ChainParams& p, PairSelector pair,
                                            const std::vector<double>& times) {
    std::vector<double> out(times.size());
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(times.size()); ++i)
        out[i] = coherence_factor(p, pair, times[i]);
    return out;
}

std::vector<double> coherence_values(const ChainParams& p, PairSelector pair,
                                     const std::vector<double>& times) {
    std::vector<double> out(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(times.size()); ++i)
        out[i] = coherence_factor(p, pair, times[i]);
    return out;
}

static void check_times(const std::vector<double>& times) {
    if (!std::is_sorted(times.begin(), times.end()))
        throw std::invalid_argument("times must be sorted ascending");
    if (!times.empty() && times.front() < 0.0)
        throw std::invalid_argument("times must be nonnegative");
}

CoherenceSeries coherence_series(const ChainParams& p, PairSelector pair,
                                 std::vector<double> times) {
    check_times(times);
    CoherenceSeries s{p, pair, std::move(times), {}};
    s.values = coherence_values(p, pair, s.times);
    return s;
}

template <bool Parallel>
static SweepGrid sweep_impl(const ChainParams& p, PairSelector pair, SweepAxis axis,
                            std::vector<double> axis_samples, std::vector<double> times) {
    p.validate();
    check_times(times);
    if (axis_samples.empty() || times.empty())
        throw std::invalid_argument("sweep: empty range");
    SweepGrid grid{axis, std::move(axis_samples), std::move(times), {}};
    std::size_t rows = grid.axis_samples.size(), cols = grid.times.size();
    grid.values.resize(rows * cols);
    auto cell = [&](std::ptrdiff_t idx) {
        ChainParams q = p;
        double ax = grid.axis_samples[idx / cols];
        (axis == SweepAxis::lambda ? q.lambda : q.gamma) = ax;
        grid.values[idx] = coherence_factor(q, pair, grid.times[idx % cols]);
    };
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(rows * cols); ++idx)
            cell(idx);
    } else {
        for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(rows * cols); ++idx)
            cell(idx);
    }
    return grid;
}

SweepGrid sweep(const ChainParams& p, PairSelector pair, SweepAxis axis,
                std::vector<double> axis_samples, std::vector<double> times) {
    return sweep_impl<true>(p, pair, axis, std::move(axis_samples), std::move(times));
}

SweepGrid sweep_serial(const ChainParams& p, PairSelector pair, SweepAxis axis,
                       std::vector<double> axis_samples, std::vector<double> times) {
    return sweep_impl<false>(p, pair, axis, std::move(axis_samples), std::move(times));
}

std::vector<CoherenceSeries> size_scan(const ChainParams& base, PairSelector pair,
                                       const std::vector<int>& sizes,
                                       const std::vector<double>& times) {
    check_times(times);
    std::vector<CoherenceSeries> out;
    out.reserve(sizes.size());
    for (int n : sizes) {
        ChainParams p = base;
        p.n_sites = n;
        p.validate();
        out.push_back(coherence_series(p, pair, times));
    }
    return out;
}

std::pair<ChainParams, double> apply_scaling(const ChainParams& p, double t,
                                             const ScalingRule& rule) {
    if (rule.m <= 0.0) throw std::invalid_argument("scale factor m must be positive");
    if (rule.m == 1.0) return {p, t};  // identity, exactly
    ChainParams q = p;
    q.lambda = 1.0 - (1.0 - p.lambda) / rule.m;
    q.g = p.g / rule.m;
    if (rule.mode == ScalingMode::scale_n)
        // nearest odd integer to m*N, ties rounded up
        q.n_sites = 2 * static_cast<int>(std::floor(rule.m * p.n_sites / 2.0)) + 1;
    else
        q.gamma = p.gamma / rule.m;
    return {q, rule.m * t};
}

double scaling_residual(const ChainParams& p, PairSelector pair, const ScalingRule& rule,
                        const std::vector<double>& times) {
    check_times(times);
    ChainParams scaled = apply_scaling(p, 0.0, rule).first;
    std::vector<double> scaled_times(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) scaled_times[i] = rule.m * times[i];
    std::vector<double> base_vals = coherence_values(p, pair, times);
    std::vector<double> scaled_vals = coherence_values(scaled, pair, scaled_times);
    double r = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        r = std::max(r, std::abs(base_vals[i] - scaled_vals[i]));
    return r;
}

}  // namespace spinchain
