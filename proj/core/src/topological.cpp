// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/topological.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "spslab/classical.hpp"

namespace spslab {

namespace {

void require_verified(const FiniteSps& s) {
    if (!s.canonical())
        throw Error(Errc::incompatible_structure,
                    "topological analysis requires a system satisfying the defining axioms");
}

// kappa(a \/ b) is the smallest image member containing kappa(a) u kappa(b),
// so it equals the union exactly when the union is itself an image. A
// property is therefore topological iff its image stays in the image family
// under unions with every image.
bool union_stable(const FiniteSps& s, ElemId a) {
    const StateSet mask = s.cartan_table()[a];
    for (const StateSet other : s.cartan_table())
        if (!s.try_property_of(mask | other)) return false;
    return true;
}

std::vector<ElemId> topological_scan(const FiniteSps& s) {
    std::vector<ElemId> out;
    for (ElemId a = 0; a < s.property_count(); ++a)
        if (union_stable(s, a)) out.push_back(a);
    return out;
}

ElemId tau_from_set(const FiniteSps& s, std::span<const ElemId> top_set, StateId p) {
    StateSet acc = s.full_state_set();
    for (ElemId a : top_set)
        if (s.actual_at(a, p)) acc &= s.cartan_table()[a];
    return s.property_of(acc);
}

} // namespace

bool is_topological(const FiniteSps& s, ElemId a) {
    require_verified(s);
    if (a >= s.property_count())
        throw Error(Errc::unknown_property, "property index out of range");
    return union_stable(s, a);
}

std::vector<ElemId> topological_properties(const FiniteSps& s) {
    require_verified(s);
    return topological_scan(s);
}

ElemId topological_state_of(const FiniteSps& s, StateId p) {
    require_verified(s);
    return tau_from_set(s, topological_scan(s), p);
}

std::vector<ElemId> topological_state_space(const FiniteSps& s) {
    require_verified(s);
    const auto top_set = topological_scan(s);
    std::vector<ElemId> out;
    for (StateId p = 0; p < s.state_count(); ++p) out.push_back(tau_from_set(s, top_set, p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ElemId> topological_cartan(const FiniteSps& s, ElemId a) {
    require_verified(s);
    if (a >= s.property_count())
        throw Error(Errc::unknown_property, "property index out of range");
    if (!union_stable(s, a))
        throw Error(Errc::not_topological,
                    "property " + s.property_name(a) + " is not topological");
    const auto top_set = topological_scan(s);
    std::vector<ElemId> out;
    for (std::size_t p : set_members(s.cartan_table()[a]))
        out.push_back(tau_from_set(s, top_set, static_cast<StateId>(p)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElemId tilde_join(const FiniteSps& s, std::span<const ElemId> as) {
    require_verified(s);
    const auto top_set = topological_scan(s);
    std::unordered_set<ElemId> top_index(top_set.begin(), top_set.end());
    for (ElemId a : as)
        if (!top_index.count(a))
            throw Error(Errc::not_topological,
                        "property " + s.property_name(a) + " is not topological");

    StateSet acc = s.full_state_set();
    for (ElemId b : top_set) {
        bool upper = true;
        for (ElemId a : as)
            if (!s.lattice().leq(a, b)) { upper = false; break; }
        if (upper) acc &= s.cartan_table()[b];
    }
    const ElemId result = s.property_of(acc);
    if (result != s.prop_join_all(as))
        throw Error(Errc::incompatible_structure,
                    "finite join inside the topological properties diverged from the lattice join");
    return result;
}

bool is_t_classical(const FiniteSps& s) {
    require_verified(s);
    // Equivalent to is_additive on to_closure(s): the image family must be
    // stable under binary unions.
    for (const StateSet a : s.cartan_table())
        for (const StateSet b : s.cartan_table())
            if (!s.try_property_of(a | b)) return false;
    return true;
}

TopologicalAnalysis analyze_topological(const FiniteSps& s) {
    require_verified(s);
    TopologicalAnalysis out;
    out.top_set = topological_scan(s);
    out.tau_of.resize(s.state_count());
    for (StateId p = 0; p < s.state_count(); ++p) out.tau_of[p] = tau_from_set(s, out.top_set, p);
    out.t_states = out.tau_of;
    std::sort(out.t_states.begin(), out.t_states.end());
    out.t_states.erase(std::unique(out.t_states.begin(), out.t_states.end()),
                       out.t_states.end());
    for (ElemId t : out.t_states) out.coverage.push_back(s.cartan_table()[t]);
    return out;
}

FiniteSps t_classical_system(const FiniteSps& s) {
    const TopologicalAnalysis analysis = analyze_topological(s);

    // xi_t must not depend on the representative: states with the same
    // topological state must agree on their actual topological properties.
    std::unordered_map<ElemId, StateId> representative;
    for (StateId p = 0; p < s.state_count(); ++p) {
        auto [it, inserted] = representative.emplace(analysis.tau_of[p], p);
        if (inserted) continue;
        for (ElemId a : analysis.top_set)
            if (s.actual_at(a, p) != s.actual_at(a, it->second))
                throw Error(Errc::incompatible_structure,
                            "actuality of topological properties differs across states sharing "
                            "a topological state");
    }

    std::vector<std::string> names;
    for (ElemId t : analysis.t_states) {
        std::vector<std::string> members;
        for (std::size_t i : set_members(s.cartan_table()[t]))
            members.push_back(s.state_name(i));
        std::sort(members.begin(), members.end());
        std::string name;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) name += '+';
            name += members[i];
        }
        names.push_back(std::move(name));
    }

    std::unordered_map<ElemId, std::size_t> t_index;
    for (std::size_t i = 0; i < analysis.t_states.size(); ++i)
        t_index.emplace(analysis.t_states[i], i);

    std::vector<StateSet> family;
    std::unordered_set<StateSet> seen;
    family.reserve(analysis.top_set.size());
    for (ElemId a : analysis.top_set) {
        StateSet mask = 0;
        for (StateId p = 0; p < s.state_count(); ++p)
            if (s.actual_at(a, p)) mask |= state_bit(t_index.at(analysis.tau_of[p]));
        if (!seen.insert(mask).second)
            throw Error(Errc::incompatible_structure,
                        "topological Cartan map is not injective on topological properties");
        family.push_back(mask);
    }

    FiniteSps out = FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets(std::move(names), std::move(family)));
    if (!is_t_classical(out))
        throw Error(Errc::incompatible_structure,
                    "topological subsystem is not additive");
    return out;
}

TopologicalIdentityReport check_topological_state_identities(const FiniteSps& s,
                                                             std::span<const TestPair> tests) {
    require_verified(s);
    TopologicalIdentityReport out;
    const TopologicalAnalysis analysis = analyze_topological(s);

    for (StateId p = 0; p < s.state_count() && out.unconditional_ok; ++p) {
        const ElemId tau_p = analysis.tau_of[p];
        std::vector<ElemId> taus;
        for (std::size_t q : set_members(s.cartan_table()[tau_p]))
            taus.push_back(analysis.tau_of[q]);
        if (s.prop_join_all(taus) != tau_p) {
            out.unconditional_ok = false;
            out.unconditional_witness = p;
        }
    }

    const OperationalClassicalAnalysis op = analyze_operational(s, tests);
    out.condition_holds = std::includes(op.cop_set.begin(), op.cop_set.end(),
                                        analysis.top_set.begin(), analysis.top_set.end());
    if (!out.condition_holds) return out;

    for (StateId p = 0; p < s.state_count(); ++p) {
        const ElemId tau_p = analysis.tau_of[p];
        std::vector<ElemId> omegas;
        StateSet image_union = 0;
        for (std::size_t q : set_members(s.cartan_table()[tau_p])) {
            omegas.push_back(op.omega_op_of[q]);
            image_union |= s.cartan_table()[op.omega_op_of[q]];
        }
        if (out.state_join_identity_ok && s.prop_join_all(omegas) != tau_p) {
            out.state_join_identity_ok = false;
            out.state_join_witness = p;
        }
        if (out.image_union_identity_ok && image_union != s.cartan_table()[tau_p]) {
            out.image_union_identity_ok = false;
            out.image_union_witness = p;
        }
        if (!out.state_join_identity_ok && !out.image_union_identity_ok) break;
    }
    return out;
}

namespace {

CoverageReport::FamilyShape shape_of(const FiniteSps& s, std::span<const ElemId> class_of) {
    CoverageReport::FamilyShape shape;
    std::vector<StateSet> blocks;
    for (StateId p = 0; p < s.state_count(); ++p)
        blocks.push_back(s.cartan_table()[class_of[p]]);

    StateSet covered = 0;
    for (StateSet b : blocks) covered |= b;
    shape.covers = covered == s.full_state_set();

    shape.partition = true;
    for (StateId p = 0; p < s.state_count() && shape.partition; ++p)
        for (StateId q = p + 1; q < s.state_count(); ++q) {
            const StateSet bp = blocks[p], bq = blocks[q];
            if (bp != bq && (bp & bq)) {
                shape.partition = false;
                shape.overlap_witness = std::make_pair(p, q);
                break;
            }
        }

    std::sort(blocks.begin(), blocks.end(), [](StateSet a, StateSet b) {
        const auto ca = set_size(a), cb = set_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
    shape.blocks = std::move(blocks);
    return shape;
}

} // namespace

CoverageReport coverage_structure(const FiniteSps& s, std::span<const TestPair> tests) {
    require_verified(s);
    CoverageReport out;
    const TopologicalAnalysis top = analyze_topological(s);
    out.topological = shape_of(s, top.tau_of);
    const OperationalClassicalAnalysis op = analyze_operational(s, tests);
    out.operational = shape_of(s, op.omega_op_of);
    return out;
}

} // namespace spslab
