// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spslab/closure.hpp"
#include "spslab/errors.hpp"
#include "spslab/lattice.hpp"
#include "spslab/state_set.hpp"

namespace spslab {

using StateId = std::uint32_t;

/// A yes/no experiment: the eigen-property of the test and the
/// eigen-property of its inverse. No disjointness is required.
struct TestPair {
    ElemId yes;
    ElemId no;
    bool operator==(const TestPair&) const = default;
};

/// A finite State Property System: states, a property lattice, and the
/// actuality relation, here carried as the table of state sets in which each
/// property is actual. Values are immutable after construction.
///
/// Properties of systems built from set families are canonically the family
/// members themselves; abstract lattices paired with an arbitrary actuality
/// table are also representable so that the axiom verifier can report
/// violations instead of refusing to construct.
class FiniteSps {
public:
    /// Empty placeholder; use the named constructors below.
    FiniteSps() = default;

    /// From a raw family of state sets (possibly not intersection-closed):
    /// properties are the distinct sets ordered by inclusion. Throws
    /// Error{not_a_lattice} when some pair of sets has no bounds in the
    /// family; axiom violations are left for verify_axioms to report.
    static FiniteSps from_family(std::vector<std::string> states, std::vector<StateSet> family);

    /// Canonical system of a closure system: one property per closed set.
    static FiniteSps from_closure(const FiniteClosureSystem& closure);

    /// Fully general constructor: any valid lattice and actuality table, and
    /// optionally a declared state pre-order (rows of "states above p") to be
    /// checked against the derived one.
    static FiniteSps from_parts(std::vector<std::string> states, FiniteLattice lattice,
                                std::vector<StateSet> cartan,
                                std::optional<std::vector<StateSet>> declared_preorder = {});

    std::size_t state_count() const { return states_.size(); }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::string& state_name(StateId p) const { return states_[p]; }
    std::optional<StateId> state_named(const std::string& name) const;
    StateSet full_state_set() const { return full_set(states_.size()); }

    std::size_t property_count() const { return cartan_.size(); }
    const FiniteLattice& lattice() const { return lattice_; }
    const std::string& property_name(ElemId a) const { return lattice_.name(a); }

    /// The Cartan image of a property: the states in which it is actual.
    StateSet cartan(ElemId a) const;
    const std::vector<StateSet>& cartan_table() const { return cartan_; }

    bool actual_at(ElemId a, StateId p) const { return contains_state(cartan_[a], p); }
    /// The actual property set of a state, ascending.
    std::vector<ElemId> actual_properties(StateId p) const;

    /// Derived state pre-order: p <= q iff every property actual at q is
    /// actual at p.
    bool state_leq(StateId p, StateId q) const;
    const std::optional<std::vector<StateSet>>& declared_preorder() const {
        return declared_preorder_;
    }

    /// True when the Cartan map is an order embedding onto an
    /// intersection-closed family with the right bounds; equivalently, when
    /// axioms 1, 3 and 4 hold. Computed once at construction. The mask-backed
    /// property algebra below requires it.
    bool canonical() const { return canonical_; }

    ElemId bottom_property() const { return lattice_.bottom(); }
    ElemId top_property() const { return lattice_.top(); }

    /// Property with the given Cartan image. Throws Error{unknown_property}.
    ElemId property_of(StateSet mask) const;
    std::optional<ElemId> try_property_of(StateSet mask) const;

    // Property algebra through Cartan images (requires canonical()).
    ElemId prop_meet(ElemId a, ElemId b) const;
    ElemId prop_join(ElemId a, ElemId b) const;
    ElemId prop_meet_all(std::span<const ElemId> as) const; // empty meet = top
    ElemId prop_join_all(std::span<const ElemId> as) const; // empty join = bottom

    /// Smallest property whose Cartan image contains `mask` (requires
    /// canonical()).
    ElemId property_closure(StateSet mask) const;

private:
    void compute_canonical();
    void require_canonical(const char* what) const;

    std::vector<std::string> states_;
    FiniteLattice lattice_;
    std::vector<StateSet> cartan_;
    std::unordered_map<StateSet, ElemId> image_index_;
    std::optional<std::vector<StateSet>> declared_preorder_;
    bool canonical_ = false;
};

/// Verdict of the four defining axioms, with concrete witnesses on failure.
struct AxiomVerdict {
    bool top_actual_everywhere = true;   // axiom 1, first half
    bool bottom_actual_nowhere = true;   // axiom 1, second half
    bool preorder_matches = true;        // axiom 2 (vs. declared pre-order, if any)
    bool property_determination = true;  // axiom 3
    bool meets_pointwise = true;         // axiom 4

    std::optional<StateId> top_witness;                     // state with 1 not actual
    std::optional<StateId> bottom_witness;                  // state with 0 actual
    std::optional<std::pair<StateId, StateId>> preorder_witness;
    std::optional<std::pair<ElemId, ElemId>> determination_witness;
    std::optional<std::pair<ElemId, ElemId>> meet_witness;

    bool pass() const {
        return top_actual_everywhere && bottom_actual_nowhere && preorder_matches &&
               property_determination && meets_pointwise;
    }
};

AxiomVerdict verify_axioms(const FiniteSps& s);

/// The Cartan image family of a verified system, as a closure system.
/// Throws Error{incompatible_structure} when the system fails the axioms.
FiniteClosureSystem to_closure(const FiniteSps& s);

/// Direct sum: disjoint-union states, product property lattice with
/// componentwise order, actuality inherited from the owning summand.
FiniteSps direct_sum(std::span<const FiniteSps> summands);

/// Direct sum along with the componentwise orthocomplementation.
std::pair<FiniteSps, OrthoMap> direct_sum(std::span<const FiniteSps> summands,
                                          std::span<const OrthoMap> orthos);

/// A witness that two systems are isomorphic: a state bijection and the
/// property bijection it induces, commuting with actuality.
struct SpsIsomorphism {
    std::vector<StateId> state_map;  // index: state of lhs, value: state of rhs
    std::vector<ElemId> property_map;
};

/// Searches for an isomorphism; std::nullopt certifies absence. Both systems
/// must be canonical. Throws Error{size_cap_exceeded} above `cap` states.
std::optional<SpsIsomorphism> find_isomorphism(const FiniteSps& lhs, const FiniteSps& rhs,
                                               std::size_t cap = kDefaultSizeCap);

} // namespace spslab
