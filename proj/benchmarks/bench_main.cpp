// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "spslab/classical.hpp"
#include "spslab/closure.hpp"
#include "spslab/sphere_model.hpp"
#include "spslab/topological.hpp"

namespace {

using namespace spslab;

std::vector<StateSet> eigenset_generators(double epsilon, int resolution) {
    const auto sample = icosahedron_sample();
    std::vector<StateSet> generators;
    for (const SpherePoint& u : sample)
        for (double d : uniform_d_grid(epsilon, resolution)) {
            const EigenSets eigen = eigensets(sample, make_test_spec(u, epsilon, d));
            generators.push_back(eigen.up);
            generators.push_back(eigen.down);
        }
    return generators;
}

std::vector<std::string> point_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    return names;
}

void BM_SaturateHalfSpheres(benchmark::State& state) {
    const auto generators = eigenset_generators(0.0, 1);
    for (auto _ : state) {
        auto family = saturate(point_names(12), generators);
        benchmark::DoNotOptimize(family.family_size());
    }
}
BENCHMARK(BM_SaturateHalfSpheres);

void BM_SaturateFineGrid(benchmark::State& state) {
    const auto generators = eigenset_generators(0.01, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto family = saturate(point_names(12), generators);
        benchmark::DoNotOptimize(family.family_size());
    }
}
BENCHMARK(BM_SaturateFineGrid)->Arg(11)->Arg(41);

void BM_AdditivityDefectPowerSet(benchmark::State& state) {
    const auto family = saturate(point_names(12), eigenset_generators(0.01, 41));
    for (auto _ : state) {
        benchmark::DoNotOptimize(family.additivity_defect());
    }
}
BENCHMARK(BM_AdditivityDefectPowerSet);

void BM_TopologicalScan(benchmark::State& state) {
    SphereModelConfig config;
    config.sample = icosahedron_sample();
    config.directions = config.sample;
    config.epsilon = 0.0;
    config.d_grid = {0.0};
    const SphereModel model = build_model(config);
    for (auto _ : state) {
        auto top_set = topological_properties(model.system);
        benchmark::DoNotOptimize(top_set.size());
    }
}
BENCHMARK(BM_TopologicalScan);

void BM_EnumerateOrthosBoolean16(benchmark::State& state) {
    std::vector<std::string> names;
    for (int i = 0; i < 16; ++i) names.push_back("m" + std::to_string(i));
    const FiniteLattice lattice = FiniteLattice::build(
        names, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
    for (auto _ : state) {
        auto orthos = enumerate_orthos(lattice);
        benchmark::DoNotOptimize(orthos.size());
    }
}
BENCHMARK(BM_EnumerateOrthosBoolean16);

void BM_Simulate(benchmark::State& state) {
    const TestSpec spec = make_test_spec(SpherePoint{0, 0, 1}, 1.0, 0.0);
    const SpherePoint p = normalized(1, 0, 1);
    for (auto _ : state) {
        auto counts = simulate(p, spec, static_cast<std::uint64_t>(state.range(0)), 7);
        benchmark::DoNotOptimize(counts.up);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(100000);

void BM_EpsilonSweep(benchmark::State& state) {
    const auto sample = icosahedron_sample();
    const std::vector<double> eps = {1.0, 0.5, 0.25, 0.1, 0.01};
    for (auto _ : state) {
        auto rows = epsilon_sweep(sample, sample, eps, 41);
        benchmark::DoNotOptimize(rows.size());
    }
}
BENCHMARK(BM_EpsilonSweep);

} // namespace

BENCHMARK_MAIN();
