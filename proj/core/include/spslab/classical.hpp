// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spslab/sps.hpp"

namespace spslab {

/// Properties a with kappa(a) u kappa(a') covering every state: exactly the
/// ones whose test (or its inverse) answers with certainty in any state.
/// All operations here require a valid orthocomplementation and throw
/// Error{invalid_ortho} otherwise.
std::vector<ElemId> classical_properties(const FiniteSps& s, const OrthoMap& ortho);

/// The meet of all classical properties actual at `p`.
ElemId classical_state_of(const FiniteSps& s, const OrthoMap& ortho, StateId p);

/// True iff bottom and top are the only classical properties.
bool is_totally_nonclassical(const FiniteSps& s, const OrthoMap& ortho);

/// Bundled classical data: the classical property set, the classical state
/// of every state, the distinct classical states, and the partition of the
/// state set they induce. Construction enforces the partition property and
/// the meet-closedness of the classical set, throwing
/// Error{partition_failure} / Error{incompatible_structure} on violation.
struct ClassicalAnalysis {
    std::vector<ElemId> classical_set;      // ascending
    std::vector<ElemId> classical_state_of; // per state
    std::vector<ElemId> state_classes;      // distinct classical states, ascending
    std::vector<StateSet> partition;        // Cartan images of state_classes
};

ClassicalAnalysis analyze_classical(const FiniteSps& s, const OrthoMap& ortho);

/// The system whose states are the classical states and whose properties are
/// the classical properties, with inherited actuality.
FiniteSps classical_subsystem(const FiniteSps& s, const OrthoMap& ortho);

/// One totally non-classical direct summand per classical state.
struct SpsSummand {
    ElemId class_property;  // the classical state, as a property of the parent
    StateSet states;        // its Cartan image in the parent
    FiniteSps system;       // states restricted, properties = interval below class_property
    OrthoMap ortho;         // induced complement a -> a' /\ class_property
    bool totally_nonclassical;
};

struct Decomposition {
    std::vector<SpsSummand> summands;
    /// Witness that the direct sum of the summands reconstructs the input.
    SpsIsomorphism witness;
};

Decomposition decompose(const FiniteSps& s, const OrthoMap& ortho,
                        std::size_t cap = kDefaultSizeCap);

/// Operationally classical properties for a given test battery: the meet
/// closure of the eigen-properties of test pairs that answer with certainty
/// in every state, together with the top. Needs no orthocomplementation.
std::vector<ElemId> operational_classical_properties(const FiniteSps& s,
                                                     std::span<const TestPair> tests);

/// The meet of all operationally classical properties actual at `p`.
ElemId operational_classical_state_of(const FiniteSps& s, std::span<const TestPair> tests,
                                      StateId p);

struct OperationalClassicalAnalysis {
    std::vector<ElemId> cop_set;      // ascending
    std::vector<ElemId> omega_op_of;  // per state
};

OperationalClassicalAnalysis analyze_operational(const FiniteSps& s,
                                                 std::span<const TestPair> tests);

/// Agreement report between the classical, topological and central property
/// sets. Classical and topological must coincide under any valid
/// orthocomplementation; all three must coincide when the lattice is also
/// atomistic, and classical properties must be central regardless.
struct ClassicalTopologicalAgreement {
    std::vector<ElemId> classical_set;
    std::vector<ElemId> topological_set;
    std::vector<ElemId> central_set;
    bool atomistic = false;
    bool classical_equals_topological = false;
    bool classical_subset_of_central = false;
    bool three_way_equal = false;  // required only when atomistic
    std::optional<ElemId> classical_topological_witness;
    std::optional<ElemId> centrality_witness;

    bool pass() const {
        return classical_equals_topological && classical_subset_of_central &&
               (!atomistic || three_way_equal);
    }
};

ClassicalTopologicalAgreement check_classical_topological_agreement(const FiniteSps& s,
                                                                    const OrthoMap& ortho);

} // namespace spslab
