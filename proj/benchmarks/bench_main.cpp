// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "bergman/counts.hpp"
#include "bergman/experiment.hpp"
#include "bergman/kernel.hpp"
#include "bergman/sampler.hpp"

namespace {

using namespace bergman;

void BM_FindRoots(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    BasisExpansion expansion(BasisSpec::scaled_monomial(), n);
    std::uint64_t index = 0;
    for (auto _ : state)
    {
        auto sample = sample_polynomial(expansion, CoefficientStream(1, index++));
        benchmark::DoNotOptimize(find_roots(sample.monomial));
    }
}
BENCHMARK(BM_FindRoots)->Arg(10)->Arg(25)->Arg(100);

void BM_KernelSeries(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto spec = BasisSpec::z_minus_one_squared();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_series(spec, n, cplx{0.3, 0.6}));
}
BENCHMARK(BM_KernelSeries)->Arg(25)->Arg(200)->Arg(2000);

void BM_AreaCount(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto spec = BasisSpec::weighted_power(1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_count_area(spec, n, 0.5));
}
BENCHMARK(BM_AreaCount)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ContourCount(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto spec = BasisSpec::z_minus_one_squared();
    for (auto _ : state)
        benchmark::DoNotOptimize(expected_count_contour(spec, n, 1.0));
}
BENCHMARK(BM_ContourCount)->Arg(25)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_MonteCarlo(benchmark::State& state)
{
    ExperimentConfig config;
    config.degree = 25;
    config.radii = {0.5, 0.9, 1.0};
    config.samples = 1000;
    config.workers = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_mc(config));
    state.SetItemsProcessed(state.iterations() * config.samples);
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
