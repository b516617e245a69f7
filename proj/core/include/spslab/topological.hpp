// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spslab/sps.hpp"

namespace spslab {

/// A property is topological when the Cartan image of its join with any
/// property is the union of the Cartan images. On a verified system this is
/// equivalent to its Cartan image staying in the image family under unions.
bool is_topological(const FiniteSps& s, ElemId a);

/// All topological properties, ascending.
std::vector<ElemId> topological_properties(const FiniteSps& s);

/// The meet of all topological properties actual at `p`.
ElemId topological_state_of(const FiniteSps& s, StateId p);

/// The distinct topological states, ascending property ids.
std::vector<ElemId> topological_state_space(const FiniteSps& s);

/// Topological Cartan map: the topological states of the states in
/// kappa(a). Throws Error{not_topological} when `a` is not topological.
std::vector<ElemId> topological_cartan(const FiniteSps& s, ElemId a);

/// Least upper bound within the topological properties (the meet of all
/// topological upper bounds); coincides with the lattice join for finite
/// input families, which is asserted. Throws Error{not_topological} on
/// non-topological input.
ElemId tilde_join(const FiniteSps& s, std::span<const ElemId> as);

/// True iff the closure system equivalent to `s` is additive (a topology).
bool is_t_classical(const FiniteSps& s);

/// The system of topological states and topological properties with
/// inherited actuality. Always additive; construction fails loudly
/// (Error{incompatible_structure}) if the expected structure is violated.
FiniteSps t_classical_system(const FiniteSps& s);

struct TopologicalAnalysis {
    std::vector<ElemId> top_set;   // topological properties, ascending
    std::vector<ElemId> tau_of;    // per state
    std::vector<ElemId> t_states;  // distinct topological states
    std::vector<StateSet> coverage; // distinct Cartan images of topological states
};

TopologicalAnalysis analyze_topological(const FiniteSps& s);

/// Per-state identities of topological states. The unconditional identity
/// tau(p) = join of tau(q) over q in kappa(tau(p)) must always hold; when
/// the topological properties are all operationally classical for the given
/// battery, tau(p) is also the join of the operational classical states over
/// kappa(tau(p)), whose Cartan images then cover kappa(tau(p)) exactly.
struct TopologicalIdentityReport {
    bool unconditional_ok = true;
    std::optional<StateId> unconditional_witness;
    bool condition_holds = false;  // topological set within operationally classical set
    bool state_join_identity_ok = true;            // (1)
    bool image_union_identity_ok = true;           // (2)
    std::optional<StateId> state_join_witness;
    std::optional<StateId> image_union_witness;

    bool pass() const {
        return unconditional_ok &&
               (!condition_holds || (state_join_identity_ok && image_union_identity_ok));
    }
};

TopologicalIdentityReport check_topological_state_identities(const FiniteSps& s,
                                                             std::span<const TestPair> tests);

/// Shape of the families {kappa(tau(p))} and {kappa(omega_op(p))}: both
/// always cover the state set; each either partitions it or overlaps.
struct CoverageReport {
    struct FamilyShape {
        std::vector<StateSet> blocks;  // distinct, canonical order
        bool covers = false;
        bool partition = false;
        std::optional<std::pair<StateId, StateId>> overlap_witness;
    };
    FamilyShape topological;
    FamilyShape operational;
};

CoverageReport coverage_structure(const FiniteSps& s, std::span<const TestPair> tests);

} // namespace spslab
