// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spslab/errors.hpp"
#include "spslab/lattice.hpp"
#include "spslab/state_set.hpp"

namespace spslab {

/// An intersection-closed family of subsets of a finite ground set (a Moore
/// family), with the empty set adjoined by convention so that the family is
/// exactly the Cartan image of the equivalent State Property System.
///
/// Members are kept in a canonical order (by cardinality, then by mask value)
/// and are addressable by index.
class FiniteClosureSystem {
public:
    /// Empty placeholder; use from_closed_sets or saturate.
    FiniteClosureSystem() = default;

    /// Validating constructor: requires the ground set and the full set in
    /// the family, the empty set present, and closure under pairwise
    /// intersection. Throws Error{invalid_document} with a witness otherwise.
    static FiniteClosureSystem from_closed_sets(std::vector<std::string> ground,
                                                std::vector<StateSet> closed);

    std::size_t ground_size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    StateSet full() const { return full_set(ground_.size()); }

    std::size_t family_size() const { return family_.size(); }
    const std::vector<StateSet>& family() const { return family_; }
    StateSet member(std::size_t i) const { return family_[i]; }

    bool contains(StateSet s) const { return index_.count(s) != 0; }
    std::optional<std::size_t> index_of(StateSet s) const;

    /// Smallest member containing `a`. Idempotent, extensive, monotone.
    StateSet close(StateSet a) const;

    /// True iff the family is closed under binary union. On a finite carrier
    /// this is equivalent to additivity of the closure operator: unions of
    /// closed sets being closed gives c(A u B) <= c(A) u c(B) because the
    /// right-hand side is then itself closed, and the reverse inclusion
    /// always holds.
    bool is_additive() const;

    /// Number of unordered pairs {A, B} of distinct members whose union is
    /// not a member.
    std::uint64_t additivity_defect() const;

    /// Members A such that A u B is a member for every member B. (These are
    /// exactly the Cartan images of the topological properties of the
    /// equivalent State Property System.)
    std::vector<std::size_t> union_stable_members() const;

    /// Inclusion order as a lattice; meets are intersections, joins are
    /// closures of unions.
    FiniteLattice inclusion_lattice() const;

private:
    friend FiniteClosureSystem saturate(std::vector<std::string>, std::span<const StateSet>);
    void index_family();

    std::vector<std::string> ground_;
    std::vector<StateSet> family_;
    std::unordered_map<StateSet, std::size_t> index_;
};

/// Smallest intersection-closed family over `ground` containing the
/// generators and the full set, with the empty set adjoined.
/// Throws Error{generator_out_of_ground} if a generator has bits outside the
/// ground set, and Error{size_cap_exceeded} for grounds above 64 states.
FiniteClosureSystem saturate(std::vector<std::string> ground, std::span<const StateSet> generators);

/// A finite topology: opens contain the empty and full sets and are closed
/// under union and intersection.
class FiniteTopology {
public:
    /// Empty placeholder; use from_open_sets.
    FiniteTopology() = default;

    static FiniteTopology from_open_sets(std::vector<std::string> ground,
                                         std::vector<StateSet> opens);

    std::size_t ground_size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    StateSet full() const { return full_set(ground_.size()); }

    const std::vector<StateSet>& opens() const { return opens_; }
    bool is_open(StateSet s) const;

    /// The closed sets, as a closure system.
    const FiniteClosureSystem& closed_sets() const { return closed_; }

    /// Topological closure of an arbitrary subset.
    StateSet closure(StateSet a) const { return closed_.close(a); }

    /// Largest open disjoint from `a` (the union of all such opens). Also
    /// computed as the complement of closure(a); the two routes are
    /// cross-asserted. Throws Error{not_open} when `a` is not open.
    StateSet pseudocomplement(StateSet a) const;

private:
    std::vector<std::string> ground_;
    std::vector<StateSet> opens_;
    FiniteClosureSystem closed_;
};

/// The three equivalent assertions about the closed-set lattice of a finite
/// topology, evaluated independently, plus their agreement.
struct ClosedLatticeVerdict {
    bool ortho_exists = false;    // closed-set lattice admits an orthocomplementation
    bool boolean_algebra = false; // closed-set lattice is a Boolean algebra
    bool clopen_coincide = false; // closed family equals open family
    bool equivalence_holds = false;
};

/// Evaluates the three assertions independently (the first via
/// orthocomplementation enumeration, subject to `cap`).
ClosedLatticeVerdict closed_lattice_verdict(const FiniteTopology& topology,
                                            std::size_t cap = kDefaultSizeCap);

} // namespace spslab
