// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/sphere_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_set>

#include "spslab/classical.hpp"
#include "spslab/counter_rng.hpp"

namespace spslab {

namespace {

double norm(double x, double y, double z) { return std::sqrt(x * x + y * y + z * z); }

std::string point_name(std::size_t i) { return "p" + std::to_string(i); }

std::vector<std::string> sample_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(point_name(i));
    return names;
}

void require_sample(std::span<const SpherePoint> sample) {
    if (sample.empty()) throw Error(Errc::empty_sample, "sample has no points");
    if (sample.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "samples are capped at 64 points");
}

void require_antipodal(std::span<const SpherePoint> sample) {
    for (const SpherePoint& p : sample) {
        bool found = false;
        for (const SpherePoint& q : sample)
            if (norm(p.x + q.x, p.y + q.y, p.z + q.z) <= kDotTolerance) {
                found = true;
                break;
            }
        if (!found)
            throw Error(Errc::invalid_document, "sample is not antipodally closed");
    }
}

std::size_t antipode_index(std::span<const SpherePoint> sample, const SpherePoint& p) {
    for (std::size_t i = 0; i < sample.size(); ++i)
        if (norm(p.x + sample[i].x, p.y + sample[i].y, p.z + sample[i].z) <= kDotTolerance)
            return i;
    throw Error(Errc::invalid_document, "sample is not antipodally closed");
}

} // namespace

SpherePoint make_sphere_point(double x, double y, double z) {
    if (std::abs(norm(x, y, z) - 1.0) > kUnitTolerance)
        throw Error(Errc::invalid_test_spec, "point is not on the unit sphere");
    return {x, y, z};
}

SpherePoint normalized(double x, double y, double z) {
    const double n = norm(x, y, z);
    if (n == 0.0) throw Error(Errc::invalid_test_spec, "cannot normalize the zero vector");
    return {x / n, y / n, z / n};
}

SpherePoint antipode(const SpherePoint& p) { return {-p.x, -p.y, -p.z}; }

double dot(const SpherePoint& a, const SpherePoint& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

TestSpec make_test_spec(SpherePoint axis, double epsilon, double d) {
    make_sphere_point(axis.x, axis.y, axis.z);
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw Error(Errc::invalid_test_spec, "epsilon must lie in [0, 1]");
    if (!(d >= -1.0 + epsilon - kUnitTolerance && d <= 1.0 - epsilon + kUnitTolerance))
        throw Error(Errc::invalid_test_spec, "d must lie in [-1+epsilon, 1-epsilon]");
    return {axis, epsilon, d};
}

double outcome_probability(const SpherePoint& p, const TestSpec& t) {
    const double x = dot(p, t.axis);
    if (t.epsilon == 0.0) {
        if (x > t.d) return 1.0;
        if (x < t.d) return 0.0;
        return 0.5;  // single-point elastic hit exactly: unstable equilibrium
    }
    if (x >= t.d + t.epsilon) return 1.0;
    if (x <= t.d - t.epsilon) return 0.0;
    return (x - (t.d - t.epsilon)) / (2.0 * t.epsilon);
}

SimulationCounts simulate(const SpherePoint& p, const TestSpec& t, std::uint64_t trials,
                          std::uint64_t seed, std::uint64_t stream) {
    SimulationCounts counts;
    const double x = dot(p, t.axis);
    const CounterRng rng(seed, stream);
    // Certainty regions are exactly where the outcome probability is 0 or 1;
    // at the single-point elastic the boundary itself is the fair coin.
    if (t.epsilon == 0.0 && x == t.d) {
        for (std::uint64_t i = 0; i < trials; ++i)
            (rng.uniform_at(i) < 0.5 ? counts.up : counts.down) += 1;
        return counts;
    }
    if (x >= t.d + t.epsilon) {
        counts.up = trials;
        return counts;
    }
    if (x <= t.d - t.epsilon) {
        counts.down = trials;
        return counts;
    }
    const double lo = t.d - t.epsilon;
    for (std::uint64_t i = 0; i < trials; ++i) {
        const double cut = lo + 2.0 * t.epsilon * rng.uniform_at(i);
        (cut < x ? counts.up : counts.down) += 1;
    }
    return counts;
}

EigenSets eigensets(std::span<const SpherePoint> sample, const TestSpec& t) {
    require_sample(sample);
    EigenSets out;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double x = dot(sample[i], t.axis);
        if (x >= t.d + t.epsilon - kDotTolerance) out.up |= state_bit(i);
        if (x <= t.d - t.epsilon + kDotTolerance) out.down |= state_bit(i);
    }
    return out;
}

std::vector<double> uniform_d_grid(double epsilon, int resolution) {
    if (resolution < 1)
        throw Error(Errc::invalid_test_spec, "d grid needs at least one point");
    const double hi = 1.0 - epsilon;
    std::vector<double> grid;
    if (hi <= 0.0 || resolution == 1) {
        grid.push_back(0.0);
        return grid;
    }
    for (int i = 0; i < resolution; ++i) {
        const double d = -hi + (2.0 * hi * i) / (resolution - 1);
        grid.push_back(std::clamp(d, -hi, hi));
    }
    return grid;
}

SphereModelConfig make_model_config(std::vector<SpherePoint> sample,
                                    std::vector<SpherePoint> directions, double epsilon,
                                    int d_resolution) {
    require_sample(sample);
    for (const SpherePoint& p : sample) make_sphere_point(p.x, p.y, p.z);
    require_antipodal(sample);
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw Error(Errc::invalid_test_spec, "epsilon must lie in [0, 1]");
    if (directions.empty()) directions = sample;
    for (const SpherePoint& u : directions) make_sphere_point(u.x, u.y, u.z);

    SphereModelConfig config;
    config.sample = std::move(sample);
    config.directions = std::move(directions);
    config.epsilon = epsilon;
    config.d_grid = uniform_d_grid(epsilon, d_resolution);
    return config;
}

SphereModel build_model(const SphereModelConfig& config) {
    require_sample(config.sample);

    std::vector<StateSet> generators;
    std::vector<EigenSets> pairs;
    for (const SpherePoint& u : config.directions)
        for (double d : config.d_grid) {
            const TestSpec t = make_test_spec(u, config.epsilon, d);
            const EigenSets eigen = eigensets(config.sample, t);
            generators.push_back(eigen.up);
            generators.push_back(eigen.down);
            pairs.push_back(eigen);
        }

    FiniteSps system = FiniteSps::from_closure(
        saturate(sample_names(config.sample.size()), generators));

    SphereModel model{std::move(system), {}};
    std::unordered_set<std::uint64_t> seen;
    for (const EigenSets& eigen : pairs) {
        const TestPair pair{model.system.property_of(eigen.up),
                            model.system.property_of(eigen.down)};
        if (seen.insert((std::uint64_t{pair.yes} << 32) | pair.no).second)
            model.tests.push_back(pair);
    }
    return model;
}

CapWitnessReport find_nontopological_cap(std::span<const SpherePoint> sample,
                                         std::size_t ortho_cap) {
    require_sample(sample);
    require_antipodal(sample);

    SphereModelConfig config;
    config.sample.assign(sample.begin(), sample.end());
    config.directions = config.sample;
    config.epsilon = 0.0;
    config.d_grid = {0.0};
    const SphereModel model = build_model(config);
    const FiniteSps& s = model.system;

    CapWitnessReport report;
    report.lattice_size = s.property_count();

    const auto cop = operational_classical_properties(s, model.tests);
    const std::unordered_set<ElemId> cop_index(cop.begin(), cop.end());

    for (std::size_t k = 0; k < sample.size() && !report.witness_found; ++k) {
        const SpherePoint& u = sample[k];
        bool degenerate = false;
        for (const SpherePoint& p : sample)
            if (std::abs(dot(p, u)) < kDotTolerance) { degenerate = true; break; }
        if (degenerate) {
            report.degenerate_directions += 1;
            continue;
        }

        const EigenSets eigen = eigensets(sample, make_test_spec(u, 0.0, 0.0));
        const ElemId cap = s.property_of(eigen.up);
        const ElemId anti = s.property_closure(state_bit(antipode_index(sample, u)));
        const ElemId joined = s.prop_join(cap, anti);
        const StateSet union_image = s.cartan_table()[cap] | s.cartan_table()[anti];
        if (s.cartan_table()[joined] == union_image) continue;
        if (!cop_index.count(cap)) continue;

        report.witness_found = true;
        report.direction_index = k;
        report.cap_property = cap;
        report.antipode_property = anti;
        report.join_property = joined;
        report.cap_image = s.cartan_table()[cap];
        report.antipode_image = s.cartan_table()[anti];
        report.join_image = s.cartan_table()[joined];
        report.union_image = union_image;
        report.cap_operationally_classical = true;
    }

    if (!report.witness_found && report.degenerate_directions == sample.size())
        throw Error(Errc::degenerate_sample,
                    "every direction has an equatorial sample point; perturb the sample");

    if (s.property_count() <= ortho_cap) {
        report.ortho_search_ran = true;
        report.ortho_count = enumerate_orthos(s.lattice(), ortho_cap).size();
    }
    return report;
}

std::vector<SweepRow> epsilon_sweep(std::span<const SpherePoint> sample,
                                    std::span<const SpherePoint> directions,
                                    std::span<const double> eps_list, int d_resolution) {
    require_sample(sample);
    if (eps_list.empty()) throw Error(Errc::invalid_test_spec, "epsilon list is empty");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (eps_list[i] >= eps_list[i - 1])
            throw Error(Errc::invalid_test_spec, "epsilon list must be sorted descending");

    std::vector<SweepRow> rows;
    for (const double eps : eps_list) {
        SphereModelConfig config;
        config.sample.assign(sample.begin(), sample.end());
        config.directions.assign(directions.begin(), directions.end());
        if (config.directions.empty()) config.directions = config.sample;
        config.epsilon = eps;
        config.d_grid = uniform_d_grid(eps, d_resolution);

        std::vector<StateSet> generators;
        for (const SpherePoint& u : config.directions)
            for (double d : config.d_grid) {
                const EigenSets eigen = eigensets(config.sample, make_test_spec(u, eps, d));
                generators.push_back(eigen.up);
                generators.push_back(eigen.down);
            }
        const FiniteClosureSystem family =
            saturate(sample_names(config.sample.size()), generators);

        SweepRow row;
        row.epsilon = eps;
        row.family_size = family.family_size();
        // One pass gives both the defect and the union-stable member count.
        const std::size_t n = family.family_size();
        std::vector<char> stable(n, 1);
        std::uint64_t defect = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (!family.contains(family.member(i) | family.member(j))) {
                    ++defect;
                    stable[i] = stable[j] = 0;
                }
        row.additivity_defect = defect;
        row.topological_count = static_cast<std::size_t>(
            std::count(stable.begin(), stable.end(), char{1}));
        row.t_classical = defect == 0;
        rows.push_back(row);
    }
    return rows;
}

std::vector<SpherePoint> icosahedron_sample() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<SpherePoint> out;
    for (const double s1 : {1.0, -1.0})
        for (const double s2 : {1.0, -1.0}) {
            out.push_back(normalized(0, s1, s2 * phi));
            out.push_back(normalized(s1, s2 * phi, 0));
            out.push_back(normalized(s1 * phi, 0, s2));
        }
    return out;
}

std::vector<SpherePoint> fibonacci_sample(std::size_t count) {
    if (count == 0) throw Error(Errc::empty_sample, "sample has no points");
    std::vector<SpherePoint> out;
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(count);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double a = golden_angle * static_cast<double>(i);
        out.push_back(normalized(r * std::cos(a), r * std::sin(a), z));
    }
    // Explicit antipodal closure, deduplicating near-coincident points.
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
        const SpherePoint q = antipode(out[i]);
        bool present = false;
        for (const SpherePoint& p : out)
            if (norm(p.x - q.x, p.y - q.y, p.z - q.z) <= kDotTolerance) {
                present = true;
                break;
            }
        if (!present) out.push_back(q);
    }
    return out;
}

} // namespace spslab
