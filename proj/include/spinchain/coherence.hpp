#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "spinchain/spectrum.hpp"

namespace spinchain {

struct CoherenceSeries {
    ChainParams params;
    PairSelector pair;
    std::vector<double> times;
    std::vector<double> values;
};

enum class SweepAxis { lambda, gamma };

// |F| over axis_samples x times, row-major (one row per axis sample).
struct SweepGrid {
    SweepAxis axis = SweepAxis::lambda;
    std::vector<double> axis_samples;
    std::vector<double> times;
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * times.size() + j]; }
};

// t -> m*t, delta -> delta/m (lambda' = 1-(1-lambda)/m, critical point 1),
// g -> g/m, and gamma/N -> gamma/(m*N) read either as N -> m*N (scale_n)
// or gamma -> gamma/m (scale_gamma).
enum class ScalingMode { scale_n, scale_gamma };

struct ScalingRule {
    double m = 1.0;
    ScalingMode mode = ScalingMode::scale_n;
};

// Single-mode damping factor sqrt(A^2 + B^2); both modes must share k.
double mode_factor(const ModeData& m1, const ModeData& m2, double t);

// |F(t)| for the two dressed fields lambda_a, lambda_b: product of
// mode_factor over the momentum grid, accumulated in log space.
double field_coherence(const ChainParams& p, double lambda_a, double lambda_b, double t);

double coherence_factor(const ChainParams& p, PairSelector pair, double t);

// Grid evaluators: values are independent per grid point, so the OpenMP
// versions produce bit-identical output to the serial references.
std::vector<double> coherence_values(const ChainParams& p, PairSelector pair,
                                     const std::vector<double>& times);
std::vector<double> coherence_values_serial(const ChainParams& p, PairSelector pair,
                                            const std::vector<double>& times);

CoherenceSeries coherence_series(const ChainParams& p, PairSelector pair,
                                 std::vector<double> times);

SweepGrid sweep(const ChainParams& p, PairSelector pair, SweepAxis axis,
                std::vector<double> axis_samples, std::vector<double> times);
SweepGrid sweep_serial(const ChainParams& p, PairSelector pair, SweepAxis axis,
                       std::vector<double> axis_samples, std::vector<double> times);

std::vector<CoherenceSeries> size_scan(const ChainParams& base, PairSelector pair,
                                       const std::vector<int>& sizes,
                                       const std::vector<double>& times);

std::pair<ChainParams, double> apply_scaling(const ChainParams& p, double t,
                                             const ScalingRule& rule);

// max over the grid of | |F|(base,t) - |F|(scaled,m*t) |
double scaling_residual(const ChainParams& p, PairSelector pair, const ScalingRule& rule,
                        const std::vector<double>& times);

}  // namespace spinchain
