// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/closure.hpp"

#include <algorithm>
#include <deque>

namespace spslab {

namespace {

void sort_canonical(std::vector<StateSet>& family) {
    std::sort(family.begin(), family.end(), [](StateSet a, StateSet b) {
        const auto ca = set_size(a), cb = set_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

} // namespace

void FiniteClosureSystem::index_family() {
    index_.clear();
    index_.reserve(family_.size() * 2);
    for (std::size_t i = 0; i < family_.size(); ++i) index_.emplace(family_[i], i);
}

FiniteClosureSystem FiniteClosureSystem::from_closed_sets(std::vector<std::string> ground,
                                                          std::vector<StateSet> closed) {
    if (ground.empty())
        throw Error(Errc::invalid_document, "closure system needs a nonempty ground set");
    if (ground.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "ground sets are capped at 64 states");

    FiniteClosureSystem cs;
    cs.ground_ = std::move(ground);
    cs.family_ = std::move(closed);
    const StateSet full = cs.full();
    for (StateSet s : cs.family_)
        if (!subset_of(s, full))
            throw Error(Errc::generator_out_of_ground, "closed set exceeds the ground set");
    sort_canonical(cs.family_);
    cs.index_family();

    if (!cs.contains(full))
        throw Error(Errc::invalid_document, "closed family is missing the ground set");
    if (!cs.contains(0))
        throw Error(Errc::invalid_document, "closed family is missing the empty set");
    for (std::size_t i = 0; i < cs.family_.size(); ++i)
        for (std::size_t j = i + 1; j < cs.family_.size(); ++j) {
            const StateSet meet = cs.family_[i] & cs.family_[j];
            if (!cs.contains(meet))
                throw Error(Errc::invalid_document,
                            "family not intersection-closed: " +
                                format_set(cs.ground_, cs.family_[i]) + " and " +
                                format_set(cs.ground_, cs.family_[j]) + " meet in the missing " +
                                format_set(cs.ground_, meet));
        }
    return cs;
}

std::optional<std::size_t> FiniteClosureSystem::index_of(StateSet s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

StateSet FiniteClosureSystem::close(StateSet a) const {
    if (auto idx = index_of(a)) return family_[*idx];
    StateSet acc = full();
    for (StateSet s : family_)
        if (subset_of(a, s)) acc &= s;
    return acc;
}

bool FiniteClosureSystem::is_additive() const {
    for (std::size_t i = 0; i < family_.size(); ++i)
        for (std::size_t j = i + 1; j < family_.size(); ++j)
            if (!contains(family_[i] | family_[j])) return false;
    return true;
}

std::uint64_t FiniteClosureSystem::additivity_defect() const {
    std::uint64_t defect = 0;
    for (std::size_t i = 0; i < family_.size(); ++i)
        for (std::size_t j = i + 1; j < family_.size(); ++j)
            if (!contains(family_[i] | family_[j])) ++defect;
    return defect;
}

std::vector<std::size_t> FiniteClosureSystem::union_stable_members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < family_.size(); ++i) {
        bool stable = true;
        for (std::size_t j = 0; j < family_.size(); ++j)
            if (!contains(family_[i] | family_[j])) { stable = false; break; }
        if (stable) out.push_back(i);
    }
    return out;
}

FiniteLattice FiniteClosureSystem::inclusion_lattice() const {
    const std::size_t n = family_.size();
    std::vector<ElemSet> below(n, ElemSet(n));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (subset_of(family_[x], family_[y])) below[y].set(x);
    std::vector<std::string> names;
    names.reserve(n);
    for (StateSet s : family_) names.push_back(format_set(ground_, s));
    return FiniteLattice::from_known_lattice(std::move(names), std::move(below));
}

FiniteClosureSystem saturate(std::vector<std::string> ground,
                             std::span<const StateSet> generators) {
    if (ground.empty())
        throw Error(Errc::invalid_document, "closure system needs a nonempty ground set");
    if (ground.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "ground sets are capped at 64 states");

    FiniteClosureSystem cs;
    cs.ground_ = std::move(ground);
    const StateSet full = cs.full();
    for (StateSet g : generators)
        if (!subset_of(g, full))
            throw Error(Errc::generator_out_of_ground,
                        "generator " + std::to_string(g) + " exceeds the ground set");

    cs.family_.push_back(full);
    cs.index_.emplace(full, 0);
    std::deque<StateSet> work(generators.begin(), generators.end());
    while (!work.empty()) {
        const StateSet s = work.front();
        work.pop_front();
        if (cs.index_.count(s)) continue;
        cs.index_.emplace(s, cs.family_.size());
        for (StateSet t : cs.family_) {
            const StateSet meet = s & t;
            if (meet != s && meet != t && !cs.index_.count(meet)) work.push_back(meet);
        }
        cs.family_.push_back(s);
    }
    if (!cs.index_.count(0)) cs.family_.push_back(0); // adjoined by convention
    sort_canonical(cs.family_);
    cs.index_family();
    return cs;
}

FiniteTopology FiniteTopology::from_open_sets(std::vector<std::string> ground,
                                              std::vector<StateSet> opens) {
    if (ground.empty()) throw Error(Errc::invalid_document, "topology needs a nonempty ground set");
    if (ground.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "ground sets are capped at 64 states");

    FiniteTopology t;
    t.ground_ = std::move(ground);
    t.opens_ = std::move(opens);
    const StateSet full = t.full();
    for (StateSet s : t.opens_)
        if (!subset_of(s, full))
            throw Error(Errc::generator_out_of_ground, "open set exceeds the ground set");
    sort_canonical(t.opens_);

    auto is_member = [&t](StateSet s) {
        return std::binary_search(t.opens_.begin(), t.opens_.end(), s,
                                  [](StateSet a, StateSet b) {
                                      const auto ca = set_size(a), cb = set_size(b);
                                      return ca != cb ? ca < cb : a < b;
                                  });
    };
    if (!is_member(0)) throw Error(Errc::invalid_document, "topology is missing the empty set");
    if (!is_member(full)) throw Error(Errc::invalid_document, "topology is missing the ground set");
    for (std::size_t i = 0; i < t.opens_.size(); ++i)
        for (std::size_t j = i + 1; j < t.opens_.size(); ++j) {
            if (!is_member(t.opens_[i] | t.opens_[j]))
                throw Error(Errc::invalid_document, "opens not closed under union");
            if (!is_member(t.opens_[i] & t.opens_[j]))
                throw Error(Errc::invalid_document, "opens not closed under intersection");
        }

    std::vector<StateSet> closed;
    closed.reserve(t.opens_.size());
    for (StateSet s : t.opens_) closed.push_back(full & ~s);
    t.closed_ = FiniteClosureSystem::from_closed_sets(t.ground_, std::move(closed));
    return t;
}

bool FiniteTopology::is_open(StateSet s) const {
    return std::find(opens_.begin(), opens_.end(), s) != opens_.end();
}

StateSet FiniteTopology::pseudocomplement(StateSet a) const {
    if (!is_open(a)) throw Error(Errc::not_open, "pseudocomplement argument must be open");
    StateSet by_union = 0;
    for (StateSet b : opens_)
        if ((a & b) == 0) by_union |= b;
    const StateSet by_closure = full() & ~closure(a);
    if (by_union != by_closure)
        throw Error(Errc::incompatible_structure,
                    "pseudocomplement routes disagree; topology invariants are broken");
    return by_union;
}

ClosedLatticeVerdict closed_lattice_verdict(const FiniteTopology& topology, std::size_t cap) {
    ClosedLatticeVerdict v;
    const FiniteLattice lattice = topology.closed_sets().inclusion_lattice();
    v.ortho_exists = !enumerate_orthos(lattice, cap).empty();
    v.boolean_algebra = lattice.is_boolean();

    std::vector<StateSet> opens = topology.opens();
    std::vector<StateSet> closed = topology.closed_sets().family();
    std::sort(opens.begin(), opens.end());
    std::sort(closed.begin(), closed.end());
    v.clopen_coincide = opens == closed;

    v.equivalence_holds = (v.ortho_exists == v.boolean_algebra) &&
                          (v.boolean_algebra == v.clopen_coincide);
    return v;
}

} // namespace spslab
