// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spslab/sps.hpp"

namespace spslab {

/// Unit vector on the sphere of test directions and particle positions.
struct SpherePoint {
    double x = 0, y = 0, z = 1;
};

inline constexpr double kUnitTolerance = 1e-12;
/// Dot products this close to a cap boundary count as on the boundary
/// (eigensets are closed caps; symmetric samples put points exactly on
/// boundaries up to rounding).
inline constexpr double kDotTolerance = 1e-9;

/// Validates unit norm within kUnitTolerance.
SpherePoint make_sphere_point(double x, double y, double z);
/// Scales an arbitrary nonzero vector onto the sphere.
SpherePoint normalized(double x, double y, double z);
SpherePoint antipode(const SpherePoint& p);
double dot(const SpherePoint& a, const SpherePoint& b);

/// One measurement: an axis, the elastic half-length epsilon in [0, 1] and
/// its center d in [-1+epsilon, 1-epsilon].
struct TestSpec {
    SpherePoint axis;
    double epsilon = 1;
    double d = 0;
};

/// Validates the parameter ranges; throws Error{invalid_test_spec}.
TestSpec make_test_spec(SpherePoint axis, double epsilon, double d);

/// Probability that the elastic cut pulls the particle to the axis pole:
/// 1 above the band, 0 below it, linear interpolation across it; a fair coin
/// at the single-point elastic when the projection hits it exactly.
double outcome_probability(const SpherePoint& p, const TestSpec& t);

struct SimulationCounts {
    std::uint64_t up = 0;
    std::uint64_t down = 0;
};

/// Runs `trials` independent elastic cuts. Reproducible: outcome i depends
/// only on (seed, stream, i).
SimulationCounts simulate(const SpherePoint& p, const TestSpec& t, std::uint64_t trials,
                          std::uint64_t seed, std::uint64_t stream = 0);

/// Certainty regions of a test over a finite sample: the closed caps of
/// points pulled to the pole (up) resp. the antipode (down) no matter where
/// the elastic breaks.
struct EigenSets {
    StateSet up = 0;
    StateSet down = 0;
};

EigenSets eigensets(std::span<const SpherePoint> sample, const TestSpec& t);

struct SphereModelConfig {
    std::vector<SpherePoint> sample;      // antipodally closed
    std::vector<SpherePoint> directions;  // test axes
    double epsilon = 1;
    std::vector<double> d_grid;
};

/// Uniform grid of valid elastic centers; a single point degenerates to {0}.
std::vector<double> uniform_d_grid(double epsilon, int resolution);

/// Validates the sample (nonempty, unit, antipodally closed, at most 64
/// points) and assembles the grid. Empty `directions` defaults to the sample.
SphereModelConfig make_model_config(std::vector<SpherePoint> sample,
                                    std::vector<SpherePoint> directions, double epsilon,
                                    int d_resolution);

/// The discretized model: the closure system generated by all eigensets over
/// directions x grid, as a State Property System, plus the test battery of
/// (up, down) eigen-property pairs.
struct SphereModel {
    FiniteSps system;
    std::vector<TestPair> tests;
};

SphereModel build_model(const SphereModelConfig& config);

/// Search report for a direction whose up-cap is operationally classical but
/// not topological: joining it with the closure of the antipode point blows
/// the Cartan image up beyond the union.
struct CapWitnessReport {
    bool witness_found = false;
    std::size_t direction_index = 0;
    ElemId cap_property = 0;       // the half-sphere eigen-property
    ElemId antipode_property = 0;  // closure of the antipode singleton
    ElemId join_property = 0;
    StateSet cap_image = 0;
    StateSet antipode_image = 0;
    StateSet join_image = 0;
    StateSet union_image = 0;
    bool cap_operationally_classical = false;
    std::size_t degenerate_directions = 0;  // skipped: some point equatorial

    std::size_t lattice_size = 0;
    bool ortho_search_ran = false;  // false: lattice above the cap
    std::size_t ortho_count = 0;
};

/// Runs the search on the epsilon = d = 0 model over the sample's own
/// directions. Throws Error{degenerate_sample} when every direction is
/// degenerate; an absent witness is reported, not thrown.
CapWitnessReport find_nontopological_cap(std::span<const SpherePoint> sample,
                                         std::size_t ortho_cap = kDefaultSizeCap);

struct SweepRow {
    double epsilon = 0;
    std::size_t family_size = 0;
    std::size_t topological_count = 0;
    std::uint64_t additivity_defect = 0;  // unordered pairs with non-closed union
    bool t_classical = false;
};

/// One row per epsilon (must be sorted descending): saturation size,
/// number of union-stable members, additivity defect, additivity flag.
std::vector<SweepRow> epsilon_sweep(std::span<const SpherePoint> sample,
                                    std::span<const SpherePoint> directions,
                                    std::span<const double> eps_list, int d_resolution);

/// The 12 icosahedron vertices (antipodally closed).
std::vector<SpherePoint> icosahedron_sample();
/// Fibonacci spiral points together with their antipodes.
std::vector<SpherePoint> fibonacci_sample(std::size_t count);

} // namespace spslab
