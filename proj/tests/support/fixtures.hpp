// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0
//
// Shared fixtures and independent oracles for the test suites. Oracles here
// deliberately use brute-force routes (subfamily enumeration, permutation
// search, triple scans) so they stay independent of the library algorithms
// they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spslab/classical.hpp"
#include "spslab/closure.hpp"
#include "spslab/counter_rng.hpp"
#include "spslab/lattice.hpp"
#include "spslab/sps.hpp"

namespace spslab::testing {

// ---------------------------------------------------------------------------
// Fixtures

inline std::vector<std::string> letter_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

/// Power set of an n-state ground set: the fully classical system.
inline FiniteSps discrete_sps(std::size_t n) {
    std::vector<StateSet> family;
    for (StateSet s = 0; s < (StateSet{1} << n); ++s) family.push_back(s);
    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets(letter_names(n), std::move(family)));
}

/// Set-complement map on a power-set system.
inline OrthoMap complement_ortho(const FiniteSps& s) {
    OrthoMap map;
    map.image.resize(s.property_count());
    for (ElemId a = 0; a < s.property_count(); ++a)
        map.image[a] = s.property_of(s.full_state_set() & ~s.cartan(a));
    return map;
}

/// 2n singleton atoms under the empty and full set; the height-two
/// modular orthocomplemented family.
inline FiniteSps mo_sps(std::size_t n) {
    std::vector<StateSet> family{0, full_set(2 * n)};
    for (std::size_t i = 0; i < 2 * n; ++i) family.push_back(state_bit(i));
    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets(letter_names(2 * n), std::move(family)));
}

/// Pairs atom i with atom i+n; bottom and top swap.
inline OrthoMap mo_ortho(const FiniteSps& s, std::size_t n) {
    OrthoMap map;
    map.image.resize(s.property_count());
    map.image[s.bottom_property()] = s.top_property();
    map.image[s.top_property()] = s.bottom_property();
    for (std::size_t i = 0; i < 2 * n; ++i)
        map.image[s.property_of(state_bit(i))] = s.property_of(state_bit((i + n) % (2 * n)));
    return map;
}

/// One state, two properties.
inline FiniteSps trivial_sps() {
    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets({"star"}, {0, 1}));
}

inline OrthoMap trivial_ortho(const FiniteSps& s) {
    OrthoMap map;
    map.image = {s.top_property(), s.bottom_property()};
    map.image[s.bottom_property()] = s.top_property();
    map.image[s.top_property()] = s.bottom_property();
    return map;
}

/// Closed sets of the two-point topology whose only nontrivial open is {p}.
inline FiniteSps sierpinski_sps() {
    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets({"p", "q"}, {0, state_bit(1), 0b11}));
}

/// The seven lines of the projective plane over the two-element field, as
/// triples of the seven nonzero vectors 1..7 (a line is a triple xor-ing to
/// zero).
inline std::vector<StateSet> fano_lines() {
    std::vector<StateSet> lines;
    for (unsigned a = 1; a <= 7; ++a)
        for (unsigned b = a + 1; b <= 7; ++b) {
            const unsigned c = a ^ b;
            if (c > b) lines.push_back(state_bit(a - 1) | state_bit(b - 1) | state_bit(c - 1));
        }
    return lines;
}

inline FiniteClosureSystem fano_closure() {
    std::vector<std::string> names;
    for (int i = 1; i <= 7; ++i) names.push_back("v" + std::to_string(i));
    const auto lines = fano_lines();
    return saturate(std::move(names), lines);
}

inline FiniteSps fano_sps() { return FiniteSps::from_closure(fano_closure()); }

/// Subspace lattice of the rank-three binary space: bottom, 7 points,
/// 7 lines, top.
inline FiniteLattice fano_lattice() { return fano_closure().inclusion_lattice(); }

inline FiniteLattice chain_lattice(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
    return FiniteLattice::build(std::move(names),
                                [](std::size_t a, std::size_t b) { return a <= b; });
}

/// Bottom, atoms a and b, then c above b, then top: the pentagon.
inline FiniteLattice n5_lattice() {
    // order: 0 < a < 1, 0 < b < c < 1, a incomparable to b and c
    std::vector<std::pair<ElemId, ElemId>> covers = {{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}};
    return FiniteLattice::from_covers({"zero", "a", "b", "c", "one"}, covers);
}

/// Abstract six-element lattice with four mutually incomparable atoms.
inline FiniteLattice mo2_lattice() {
    std::vector<std::pair<ElemId, ElemId>> covers = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                     {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    return FiniteLattice::from_covers({"zero", "a", "astar", "b", "bstar", "one"}, covers);
}

/// Power set of `atoms` generators as an abstract lattice.
inline FiniteLattice boolean_lattice(std::size_t atoms) {
    const std::size_t n = std::size_t{1} << atoms;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
    return FiniteLattice::build(std::move(names),
                                [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

// ---------------------------------------------------------------------------
// Random structure generators (all deterministic via CounterRng)

inline std::vector<StateSet> random_subsets(CounterRng& rng, std::size_t ground,
                                            std::size_t count) {
    std::vector<StateSet> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(rng.next() & full_set(ground));
    return out;
}

inline FiniteClosureSystem random_closure_system(CounterRng& rng, std::size_t max_ground) {
    const std::size_t ground = 1 + rng.next_below(max_ground);
    const std::size_t generators = rng.next_below(ground + 4);
    const auto gens = random_subsets(rng, ground, generators);
    return saturate(letter_names(ground), gens);
}

inline FiniteSps random_sps(CounterRng& rng, std::size_t max_ground) {
    return FiniteSps::from_closure(random_closure_system(rng, max_ground));
}

/// Random topology: random subsets closed under union and intersection.
inline FiniteTopology random_topology(CounterRng& rng, std::size_t ground) {
    const StateSet full = full_set(ground);
    std::vector<StateSet> opens = {0, full};
    const std::size_t extra = rng.next_below(ground + 3);
    for (std::size_t i = 0; i < extra; ++i) opens.push_back(rng.next() & full);
    // close under both operations
    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t size = opens.size();
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) {
                for (StateSet candidate : {opens[i] | opens[j], opens[i] & opens[j]}) {
                    if (std::find(opens.begin(), opens.end(), candidate) == opens.end()) {
                        opens.push_back(candidate);
                        changed = true;
                    }
                }
            }
    }
    return FiniteTopology::from_open_sets(letter_names(ground), std::move(opens));
}

/// Every topology on a ground set of up to four points, by exhaustive
/// enumeration over the families of proper nonempty subsets.
inline std::vector<FiniteTopology> all_topologies(std::size_t ground) {
    const StateSet full = full_set(ground);
    std::vector<StateSet> middles;
    for (StateSet s = 1; s < full; ++s) middles.push_back(s);
    std::vector<FiniteTopology> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middles.size()); ++pick) {
        std::vector<StateSet> opens = {0, full};
        for (std::size_t i = 0; i < middles.size(); ++i)
            if ((pick >> i) & 1) opens.push_back(middles[i]);
        bool closed = true;
        for (std::size_t i = 0; i < opens.size() && closed; ++i)
            for (std::size_t j = i + 1; j < opens.size(); ++j) {
                const bool u = std::find(opens.begin(), opens.end(), opens[i] | opens[j]) !=
                               opens.end();
                const bool m = std::find(opens.begin(), opens.end(), opens[i] & opens[j]) !=
                               opens.end();
                if (!u || !m) { closed = false; break; }
            }
        if (closed) out.push_back(FiniteTopology::from_open_sets(letter_names(ground), opens));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oracles

/// Saturation by subfamily enumeration: intersections of every nonempty
/// subfamily of the generators plus the full set, with the empty set
/// adjoined. Exponential, for small generator counts only.
inline std::vector<StateSet> oracle_saturate(std::size_t ground,
                                             std::span<const StateSet> generators) {
    const StateSet full = full_set(ground);
    std::vector<StateSet> family = {full, 0};
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << generators.size()); ++pick) {
        StateSet acc = full;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if ((pick >> i) & 1) acc &= generators[i];
        family.push_back(acc);
    }
    std::sort(family.begin(), family.end(), [](StateSet a, StateSet b) {
        const auto ca = set_size(a), cb = set_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

/// Distributivity by direct triple scan through order-derived bounds.
inline bool oracle_distributive(const FiniteLattice& l) {
    const auto glb = [&l](ElemId x, ElemId y) {
        ElemId best = l.bottom();
        for (ElemId z = 0; z < l.size(); ++z)
            if (l.leq(z, x) && l.leq(z, y) && l.leq(best, z)) best = z;
        return best;
    };
    const auto lub = [&l](ElemId x, ElemId y) {
        ElemId best = l.top();
        for (ElemId z = 0; z < l.size(); ++z)
            if (l.leq(x, z) && l.leq(y, z) && l.leq(z, best)) best = z;
        return best;
    };
    for (ElemId x = 0; x < l.size(); ++x)
        for (ElemId y = 0; y < l.size(); ++y)
            for (ElemId z = 0; z < l.size(); ++z)
                if (glb(x, lub(y, z)) != lub(glb(x, y), glb(x, z))) return false;
    return true;
}

/// All orthocomplementations by naive pair-assignment backtracking over the
/// whole carrier (no irreducible shortcut).
inline std::vector<OrthoMap> oracle_enumerate_orthos(const FiniteLattice& l) {
    const std::size_t n = l.size();
    std::vector<ElemId> image(n, static_cast<ElemId>(n));
    std::vector<OrthoMap> found;

    auto consistent = [&](ElemId x, ElemId y) {
        if (l.meet(x, y) != l.bottom() || l.join(x, y) != l.top()) return false;
        for (ElemId a = 0; a < n; ++a) {
            if (image[a] == static_cast<ElemId>(n)) continue;
            if (l.leq(a, x) && !l.leq(y, image[a])) return false;
            if (l.leq(x, a) && !l.leq(image[a], y)) return false;
            if (l.leq(a, y) && !l.leq(x, image[a])) return false;
            if (l.leq(y, a) && !l.leq(image[a], x)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, ElemId next) -> void {
        while (next < n && image[next] != static_cast<ElemId>(n)) ++next;
        if (next == n) {
            found.push_back(OrthoMap{image});
            return;
        }
        for (ElemId y = 0; y < n; ++y) {
            if (image[y] != static_cast<ElemId>(n) && image[y] != next) continue;
            if (y != next && image[y] == next) continue;  // asymmetric leftover
            if (!consistent(next, y)) continue;
            const ElemId saved_x = image[next], saved_y = image[y];
            image[next] = y;
            image[y] = next;
            self(self, next + 1);
            image[next] = saved_x;
            image[y] = saved_y;
        }
    };
    search(search, 0);

    std::sort(found.begin(), found.end(),
              [](const OrthoMap& a, const OrthoMap& b) { return a.image < b.image; });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

/// Four-sigma binomial frequency bound.
inline double binomial_bound(double p, double n) {
    return 4.0 * std::sqrt(std::max(p * (1.0 - p), 1e-12) / n);
}

} // namespace spslab::testing
