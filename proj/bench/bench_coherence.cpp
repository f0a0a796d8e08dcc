#include <benchmark/benchmark.h>

#include <vector>

#include "spinchain/coherence.hpp"

using namespace spinchain;

namespace {

std::vector<double> time_grid(int n, double dt) {
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i) t[i] = dt * i;
    return t;
}

std::vector<double> lambda_grid() {
    std::vector<double> l(41);
    for (int i = 0; i < 41; ++i) l[i] = 0.1 * i;
    return l;
}

void bm_series_serial(benchmark::State& state) {
    ChainParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.05};
    const auto ts = time_grid(1001, 0.1);
    for (auto _ : state) {
        auto v = coherence_values_serial(p, {1, 2}, ts);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * ts.size());
}

void bm_series_parallel(benchmark::State& state) {
    ChainParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.05};
    const auto ts = time_grid(1001, 0.1);
    for (auto _ : state) {
        auto v = coherence_values(p, {1, 2}, ts);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * ts.size());
}

void bm_sweep_serial(benchmark::State& state) {
    ChainParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.05};
    const auto ts = time_grid(301, 0.1);
    for (auto _ : state) {
        auto g = sweep_serial(p, {1, 2}, SweepAxis::lambda, lambda_grid(), ts);
        benchmark::DoNotOptimize(g.values.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 41 * ts.size());
}

void bm_sweep_parallel(benchmark::State& state) {
    ChainParams p{static_cast<int>(state.range(0)), 1.0, 1.0, 0.05};
    const auto ts = time_grid(301, 0.1);
    for (auto _ : state) {
        auto g = sweep(p, {1, 2}, SweepAxis::lambda, lambda_grid(), ts);
        benchmark::DoNotOptimize(g.values.data());
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 41 * ts.size());
}

}  // namespace

BENCHMARK(bm_series_serial)->Arg(101)->Arg(401)->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_series_parallel)->Arg(101)->Arg(401)->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep_serial)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_sweep_parallel)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
