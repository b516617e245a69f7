// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/classical.hpp"

#include <algorithm>
#include <unordered_set>

#include "spslab/topological.hpp"

namespace spslab {

namespace {

// Document-grammar-safe name for a constructed state: member names joined
// by '+', e.g. the class of {p, q} becomes "p+q".
std::string class_state_name(const FiniteSps& s, StateSet block) {
    std::vector<std::string> names;
    for (std::size_t i : set_members(block)) names.push_back(s.state_name(i));
    std::sort(names.begin(), names.end());
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += '+';
        out += names[i];
    }
    return out;
}

void require_ortho(const FiniteSps& s, const OrthoMap& ortho) {
    if (!s.canonical())
        throw Error(Errc::incompatible_structure,
                    "classical analysis requires a system satisfying the defining axioms");
    if (!verify_ortho(s.lattice(), ortho).pass())
        throw Error(Errc::invalid_ortho, "map fails the orthocomplementation axioms");
}

std::vector<ElemId> classical_scan(const FiniteSps& s, const OrthoMap& ortho) {
    const StateSet full = s.full_state_set();
    std::vector<ElemId> out;
    for (ElemId a = 0; a < s.property_count(); ++a)
        if ((s.cartan_table()[a] | s.cartan_table()[ortho(a)]) == full) out.push_back(a);
    return out;
}

ElemId meet_of_actual(const FiniteSps& s, std::span<const ElemId> pool, StateId p) {
    StateSet acc = s.full_state_set();
    for (ElemId a : pool)
        if (s.actual_at(a, p)) acc &= s.cartan_table()[a];
    return s.property_of(acc);
}

} // namespace

std::vector<ElemId> classical_properties(const FiniteSps& s, const OrthoMap& ortho) {
    require_ortho(s, ortho);
    return classical_scan(s, ortho);
}

ElemId classical_state_of(const FiniteSps& s, const OrthoMap& ortho, StateId p) {
    require_ortho(s, ortho);
    return meet_of_actual(s, classical_scan(s, ortho), p);
}

bool is_totally_nonclassical(const FiniteSps& s, const OrthoMap& ortho) {
    require_ortho(s, ortho);
    const auto classical = classical_scan(s, ortho);
    std::vector<ElemId> bounds = {s.bottom_property(), s.top_property()};
    std::sort(bounds.begin(), bounds.end());
    return classical == bounds;
}

ClassicalAnalysis analyze_classical(const FiniteSps& s, const OrthoMap& ortho) {
    require_ortho(s, ortho);
    ClassicalAnalysis out;
    out.classical_set = classical_scan(s, ortho);

    std::unordered_set<ElemId> classical_index(out.classical_set.begin(),
                                               out.classical_set.end());
    out.classical_state_of.resize(s.state_count());
    for (StateId p = 0; p < s.state_count(); ++p) {
        const ElemId w = meet_of_actual(s, out.classical_set, p);
        if (!classical_index.count(w))
            throw Error(Errc::incompatible_structure,
                        "meet of classical properties is not classical at state " +
                            s.state_name(p));
        if (!s.actual_at(w, p))
            throw Error(Errc::incompatible_structure,
                        "classical state not actual at its own state " + s.state_name(p));
        out.classical_state_of[p] = w;
    }

    out.state_classes = out.classical_state_of;
    std::sort(out.state_classes.begin(), out.state_classes.end());
    out.state_classes.erase(std::unique(out.state_classes.begin(), out.state_classes.end()),
                            out.state_classes.end());

    StateSet covered = 0;
    for (ElemId w : out.state_classes) {
        const StateSet block = s.cartan_table()[w];
        if (covered & block)
            throw Error(Errc::partition_failure,
                        "classical state blocks overlap at " + s.property_name(w));
        covered |= block;
        out.partition.push_back(block);
    }
    if (covered != s.full_state_set())
        throw Error(Errc::partition_failure, "classical state blocks do not cover the states");
    return out;
}

FiniteSps classical_subsystem(const FiniteSps& s, const OrthoMap& ortho) {
    const ClassicalAnalysis analysis = analyze_classical(s, ortho);

    // Meets of classical properties must stay classical for the subsystem to
    // carry the inherited meets.
    std::unordered_set<ElemId> classical_index(analysis.classical_set.begin(),
                                               analysis.classical_set.end());
    for (ElemId a : analysis.classical_set)
        for (ElemId b : analysis.classical_set)
            if (!classical_index.count(s.prop_meet(a, b)))
                throw Error(Errc::incompatible_structure,
                            "classical properties are not meet-closed");

    std::vector<std::string> class_names;
    for (ElemId w : analysis.state_classes)
        class_names.push_back(class_state_name(s, s.cartan_table()[w]));

    std::vector<StateSet> family;
    family.reserve(analysis.classical_set.size());
    for (ElemId a : analysis.classical_set) {
        StateSet mask = 0;
        for (std::size_t i = 0; i < analysis.state_classes.size(); ++i)
            if (s.lattice().leq(analysis.state_classes[i], a)) mask |= state_bit(i);
        family.push_back(mask);
    }
    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets(std::move(class_names), std::move(family)));
}

Decomposition decompose(const FiniteSps& s, const OrthoMap& ortho, std::size_t cap) {
    const ClassicalAnalysis analysis = analyze_classical(s, ortho);

    Decomposition out;
    std::vector<FiniteSps> systems;
    for (ElemId w : analysis.state_classes) {
        const StateSet block = s.cartan_table()[w];
        const auto block_states = set_members(block);

        std::vector<std::size_t> local_of_global(s.state_count(), 0);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < block_states.size(); ++i) {
            local_of_global[block_states[i]] = i;
            names.push_back(s.state_name(static_cast<StateId>(block_states[i])));
        }
        auto compress = [&](StateSet mask) {
            StateSet local = 0;
            for (std::size_t g : set_members(mask)) local |= state_bit(local_of_global[g]);
            return local;
        };

        // Interval below w, with actuality restricted to its block.
        std::vector<ElemId> interval;
        std::vector<StateSet> family;
        for (ElemId a = 0; a < s.property_count(); ++a)
            if (s.lattice().leq(a, w)) {
                interval.push_back(a);
                family.push_back(compress(s.cartan_table()[a]));
            }

        FiniteSps part = FiniteSps::from_closure(
            FiniteClosureSystem::from_closed_sets(std::move(names), family));

        OrthoMap part_ortho;
        part_ortho.image.resize(part.property_count());
        for (std::size_t i = 0; i < interval.size(); ++i) {
            const ElemId relative = s.prop_meet(ortho(interval[i]), w);
            part_ortho.image[part.property_of(family[i])] =
                part.property_of(compress(s.cartan_table()[relative]));
        }
        if (!verify_ortho(part.lattice(), part_ortho).pass())
            throw Error(Errc::incompatible_structure,
                        "induced complement on summand " + s.property_name(w) +
                            " is not an orthocomplementation");

        SpsSummand summand{w, block, std::move(part), std::move(part_ortho), false};
        summand.totally_nonclassical = is_totally_nonclassical(summand.system, summand.ortho);
        systems.push_back(summand.system);
        out.summands.push_back(std::move(summand));
    }

    const FiniteSps sum = direct_sum(systems);
    auto witness = find_isomorphism(sum, s, cap);
    if (!witness)
        throw Error(Errc::incompatible_structure,
                    "direct sum of summands failed to reconstruct the system");
    out.witness = std::move(*witness);
    return out;
}

std::vector<ElemId> operational_classical_properties(const FiniteSps& s,
                                                     std::span<const TestPair> tests) {
    if (!s.canonical())
        throw Error(Errc::incompatible_structure,
                    "operational analysis requires a system satisfying the defining axioms");
    const StateSet full = s.full_state_set();
    std::unordered_set<ElemId> members;
    members.insert(s.top_property());
    for (const TestPair& t : tests) {
        if (t.yes >= s.property_count() || t.no >= s.property_count())
            throw Error(Errc::unknown_property, "test pair names an unknown property");
        if ((s.cartan_table()[t.yes] | s.cartan_table()[t.no]) == full) {
            members.insert(t.yes);
            members.insert(t.no);
        }
    }
    // Close under binary meets.
    std::vector<ElemId> work(members.begin(), members.end());
    while (!work.empty()) {
        const ElemId a = work.back();
        work.pop_back();
        std::vector<ElemId> snapshot(members.begin(), members.end());
        for (ElemId b : snapshot) {
            const ElemId m = s.prop_meet(a, b);
            if (members.insert(m).second) work.push_back(m);
        }
    }
    std::vector<ElemId> out(members.begin(), members.end());
    std::sort(out.begin(), out.end());
    return out;
}

ElemId operational_classical_state_of(const FiniteSps& s, std::span<const TestPair> tests,
                                      StateId p) {
    return meet_of_actual(s, operational_classical_properties(s, tests), p);
}

OperationalClassicalAnalysis analyze_operational(const FiniteSps& s,
                                                 std::span<const TestPair> tests) {
    OperationalClassicalAnalysis out;
    out.cop_set = operational_classical_properties(s, tests);
    out.omega_op_of.resize(s.state_count());
    for (StateId p = 0; p < s.state_count(); ++p)
        out.omega_op_of[p] = meet_of_actual(s, out.cop_set, p);
    return out;
}

ClassicalTopologicalAgreement check_classical_topological_agreement(const FiniteSps& s,
                                                                    const OrthoMap& ortho) {
    require_ortho(s, ortho);
    ClassicalTopologicalAgreement out;
    out.classical_set = classical_scan(s, ortho);
    out.topological_set = topological_properties(s);
    out.central_set = central_elements(s.lattice(), ortho);
    out.atomistic = s.lattice().is_atomistic();

    out.classical_equals_topological = out.classical_set == out.topological_set;
    if (!out.classical_equals_topological) {
        std::vector<ElemId> diff;
        std::set_symmetric_difference(out.classical_set.begin(), out.classical_set.end(),
                                      out.topological_set.begin(), out.topological_set.end(),
                                      std::back_inserter(diff));
        out.classical_topological_witness = diff.front();
    }

    out.classical_subset_of_central =
        std::includes(out.central_set.begin(), out.central_set.end(), out.classical_set.begin(),
                      out.classical_set.end());
    if (!out.classical_subset_of_central) {
        std::vector<ElemId> diff;
        std::set_difference(out.classical_set.begin(), out.classical_set.end(),
                            out.central_set.begin(), out.central_set.end(),
                            std::back_inserter(diff));
        out.centrality_witness = diff.front();
    }

    out.three_way_equal =
        out.classical_equals_topological && out.classical_set == out.central_set;
    return out;
}

} // namespace spslab
