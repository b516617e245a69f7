// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/sps.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace spslab {

namespace {

std::vector<StateSet> dedupe_sorted(std::vector<StateSet> family) {
    std::sort(family.begin(), family.end(), [](StateSet a, StateSet b) {
        const auto ca = set_size(a), cb = set_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

} // namespace

std::optional<StateId> FiniteSps::state_named(const std::string& name) const {
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == name) return static_cast<StateId>(i);
    return std::nullopt;
}

StateSet FiniteSps::cartan(ElemId a) const {
    if (a >= cartan_.size())
        throw Error(Errc::unknown_property, "property index out of range");
    return cartan_[a];
}

std::vector<ElemId> FiniteSps::actual_properties(StateId p) const {
    std::vector<ElemId> out;
    for (ElemId a = 0; a < cartan_.size(); ++a)
        if (contains_state(cartan_[a], p)) out.push_back(a);
    return out;
}

bool FiniteSps::state_leq(StateId p, StateId q) const {
    for (const StateSet mask : cartan_)
        if (contains_state(mask, q) && !contains_state(mask, p)) return false;
    return true;
}

void FiniteSps::compute_canonical() {
    image_index_.clear();
    image_index_.reserve(cartan_.size() * 2);
    bool injective = true;
    for (ElemId a = 0; a < cartan_.size(); ++a)
        if (!image_index_.emplace(cartan_[a], a).second) injective = false;

    canonical_ = injective && cartan_[lattice_.bottom()] == 0 &&
                 cartan_[lattice_.top()] == full_state_set();
    if (!canonical_) return;
    const std::size_t n = cartan_.size();
    for (ElemId a = 0; a < n && canonical_; ++a)
        for (ElemId b = 0; b < n; ++b) {
            if (lattice_.leq(a, b) != subset_of(cartan_[a], cartan_[b])) {
                canonical_ = false;
                break;
            }
            if (b > a && !image_index_.count(cartan_[a] & cartan_[b])) {
                canonical_ = false;
                break;
            }
        }
}

void FiniteSps::require_canonical(const char* what) const {
    if (!canonical_)
        throw Error(Errc::incompatible_structure,
                    std::string(what) + " requires a system satisfying the defining axioms");
}

FiniteSps FiniteSps::from_family(std::vector<std::string> states, std::vector<StateSet> family) {
    if (states.empty()) throw Error(Errc::invalid_document, "system needs at least one state");
    if (states.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "ground sets are capped at 64 states");
    if (family.empty()) throw Error(Errc::invalid_document, "system needs at least one property");

    FiniteSps s;
    s.states_ = std::move(states);
    s.cartan_ = dedupe_sorted(std::move(family));
    for (StateSet mask : s.cartan_)
        if (!subset_of(mask, s.full_state_set()))
            throw Error(Errc::generator_out_of_ground, "property set exceeds the state set");

    std::vector<std::string> names;
    names.reserve(s.cartan_.size());
    for (StateSet mask : s.cartan_) names.push_back(format_set(s.states_, mask));

    // An intersection-closed family with both bounds is already known to be
    // a lattice under inclusion; that spares large (valid) documents the
    // per-pair bound validation.
    std::unordered_set<StateSet> image(s.cartan_.begin(), s.cartan_.end());
    bool known_lattice = image.count(0) && image.count(s.full_state_set());
    for (std::size_t i = 0; i < s.cartan_.size() && known_lattice; ++i)
        for (std::size_t j = i + 1; j < s.cartan_.size(); ++j)
            if (!image.count(s.cartan_[i] & s.cartan_[j])) {
                known_lattice = false;
                break;
            }

    const auto& table = s.cartan_;
    if (known_lattice) {
        std::vector<ElemSet> below(table.size(), ElemSet(table.size()));
        for (std::size_t y = 0; y < table.size(); ++y)
            for (std::size_t x = 0; x < table.size(); ++x)
                if (subset_of(table[x], table[y])) below[y].set(x);
        s.lattice_ = FiniteLattice::from_known_lattice(std::move(names), std::move(below));
    } else {
        s.lattice_ =
            FiniteLattice::build(std::move(names), [&table](std::size_t a, std::size_t b) {
                return subset_of(table[a], table[b]);
            });
    }
    s.compute_canonical();
    return s;
}

FiniteSps FiniteSps::from_closure(const FiniteClosureSystem& closure) {
    FiniteSps s;
    s.states_ = closure.ground();
    s.cartan_ = closure.family();
    s.lattice_ = closure.inclusion_lattice();
    s.image_index_.reserve(s.cartan_.size() * 2);
    for (ElemId a = 0; a < s.cartan_.size(); ++a) s.image_index_.emplace(s.cartan_[a], a);
    s.canonical_ = true;
    return s;
}

FiniteSps FiniteSps::from_parts(std::vector<std::string> states, FiniteLattice lattice,
                                std::vector<StateSet> cartan,
                                std::optional<std::vector<StateSet>> declared_preorder) {
    if (states.empty()) throw Error(Errc::invalid_document, "system needs at least one state");
    if (states.size() > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "ground sets are capped at 64 states");
    if (cartan.size() != lattice.size())
        throw Error(Errc::invalid_document, "actuality table does not match the lattice");
    if (declared_preorder && declared_preorder->size() != states.size())
        throw Error(Errc::invalid_document, "declared pre-order does not match the state set");

    FiniteSps s;
    s.states_ = std::move(states);
    s.lattice_ = std::move(lattice);
    s.cartan_ = std::move(cartan);
    s.declared_preorder_ = std::move(declared_preorder);
    for (StateSet mask : s.cartan_)
        if (!subset_of(mask, s.full_state_set()))
            throw Error(Errc::generator_out_of_ground, "property set exceeds the state set");
    s.compute_canonical();
    return s;
}

ElemId FiniteSps::property_of(StateSet mask) const {
    if (auto found = try_property_of(mask)) return *found;
    throw Error(Errc::unknown_property, "no property has Cartan image " + format_set(states_, mask));
}

std::optional<ElemId> FiniteSps::try_property_of(StateSet mask) const {
    auto it = image_index_.find(mask);
    if (it == image_index_.end()) return std::nullopt;
    return it->second;
}

ElemId FiniteSps::prop_meet(ElemId a, ElemId b) const {
    require_canonical("property meet");
    return property_of(cartan_[a] & cartan_[b]);
}

ElemId FiniteSps::prop_meet_all(std::span<const ElemId> as) const {
    require_canonical("property meet");
    StateSet acc = full_state_set();
    for (ElemId a : as) acc &= cartan_[a];
    return property_of(acc);
}

ElemId FiniteSps::property_closure(StateSet mask) const {
    require_canonical("property closure");
    if (auto found = try_property_of(mask)) return *found;
    StateSet acc = full_state_set();
    for (StateSet s : cartan_)
        if (subset_of(mask, s)) acc &= s;
    return property_of(acc);
}

ElemId FiniteSps::prop_join(ElemId a, ElemId b) const {
    return property_closure(cartan_[a] | cartan_[b]);
}

ElemId FiniteSps::prop_join_all(std::span<const ElemId> as) const {
    StateSet acc = 0;
    for (ElemId a : as) acc |= cartan_[a];
    return property_closure(acc);
}

AxiomVerdict verify_axioms(const FiniteSps& s) {
    AxiomVerdict v;
    const auto& table = s.cartan_table();
    const std::size_t n = table.size();
    const std::size_t m = s.state_count();
    const auto& lattice = s.lattice();

    // Axiom 1: the top is actual in every state, the bottom in none.
    const StateSet top_mask = table[lattice.top()];
    const StateSet bottom_mask = table[lattice.bottom()];
    for (StateId p = 0; p < m; ++p) {
        if (v.top_actual_everywhere && !contains_state(top_mask, p)) {
            v.top_actual_everywhere = false;
            v.top_witness = p;
        }
        if (v.bottom_actual_nowhere && contains_state(bottom_mask, p)) {
            v.bottom_actual_nowhere = false;
            v.bottom_witness = p;
        }
    }

    // Axiom 2: a declared pre-order must coincide with the derived one.
    if (const auto& declared = s.declared_preorder()) {
        for (StateId p = 0; p < m && v.preorder_matches; ++p)
            for (StateId q = 0; q < m; ++q) {
                const bool declared_leq = contains_state((*declared)[p], q);
                if (declared_leq != s.state_leq(p, q)) {
                    v.preorder_matches = false;
                    v.preorder_witness = std::make_pair(p, q);
                    break;
                }
            }
    }

    // Axiom 3: the lattice order is exactly Cartan-image inclusion.
    for (ElemId a = 0; a < n && v.property_determination; ++a)
        for (ElemId b = 0; b < n; ++b)
            if (lattice.leq(a, b) != subset_of(table[a], table[b])) {
                v.property_determination = false;
                v.determination_witness = std::make_pair(a, b);
                break;
            }

    // Axiom 4: Cartan images of meets are intersections of Cartan images.
    // Once axiom 3 holds the order is image inclusion, so the meet of a and b
    // is the image-largest common subset; the axiom then holds for (a, b)
    // exactly when the intersection itself is an image. Without axiom 3 the
    // lattice meet is consulted directly.
    if (v.property_determination) {
        std::unordered_map<StateSet, ElemId> image;
        image.reserve(n * 2);
        for (ElemId a = 0; a < n; ++a) image.emplace(table[a], a);
        for (ElemId a = 0; a < n && v.meets_pointwise; ++a)
            for (ElemId b = a; b < n; ++b)
                if (!image.count(table[a] & table[b])) {
                    v.meets_pointwise = false;
                    v.meet_witness = std::make_pair(a, b);
                    break;
                }
    } else {
        for (ElemId a = 0; a < n && v.meets_pointwise; ++a)
            for (ElemId b = a; b < n; ++b)
                if (table[lattice.meet(a, b)] != (table[a] & table[b])) {
                    v.meets_pointwise = false;
                    v.meet_witness = std::make_pair(a, b);
                    break;
                }
    }
    return v;
}

FiniteClosureSystem to_closure(const FiniteSps& s) {
    if (!s.canonical())
        throw Error(Errc::incompatible_structure,
                    "only systems satisfying the defining axioms translate to closure systems");
    return FiniteClosureSystem::from_closed_sets(s.state_names(), s.cartan_table());
}

namespace {

constexpr std::size_t kDirectSumPropertyCap = 1u << 20;

std::vector<std::string> merged_state_names(std::span<const FiniteSps> summands) {
    std::vector<std::string> names;
    for (const FiniteSps& s : summands)
        for (const std::string& name : s.state_names()) names.push_back(name);
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return names;
    names.clear();
    for (std::size_t k = 0; k < summands.size(); ++k)
        for (const std::string& name : summands[k].state_names())
            names.push_back(std::to_string(k) + "." + name);
    return names;
}

// Walks the product lattice of the summands, calling fn with the property
// index tuple and the combined Cartan image.
template <typename Fn>
void for_each_product(std::span<const FiniteSps> summands, std::span<const std::size_t> offsets,
                      Fn&& fn) {
    std::vector<ElemId> tuple(summands.size(), 0);
    while (true) {
        StateSet mask = 0;
        for (std::size_t k = 0; k < summands.size(); ++k)
            mask |= summands[k].cartan_table()[tuple[k]] << offsets[k];
        fn(std::span<const ElemId>(tuple), mask);
        std::size_t k = 0;
        while (k < summands.size()) {
            if (++tuple[k] < summands[k].property_count()) break;
            tuple[k] = 0;
            ++k;
        }
        if (k == summands.size()) break;
    }
}

} // namespace

FiniteSps direct_sum(std::span<const FiniteSps> summands) {
    if (summands.empty())
        throw Error(Errc::incompatible_structure, "direct sum needs at least one summand");
    std::size_t total_states = 0;
    std::size_t total_properties = 1;
    for (const FiniteSps& s : summands) {
        if (!s.canonical())
            throw Error(Errc::incompatible_structure,
                        "direct sum summands must satisfy the defining axioms");
        total_states += s.state_count();
        total_properties *= s.property_count();
        if (total_properties > kDirectSumPropertyCap)
            throw Error(Errc::size_cap_exceeded, "direct sum property lattice too large");
    }
    if (total_states > kMaxStates)
        throw Error(Errc::size_cap_exceeded, "direct sum exceeds the 64-state cap");

    std::vector<std::size_t> offsets(summands.size(), 0);
    for (std::size_t k = 1; k < summands.size(); ++k)
        offsets[k] = offsets[k - 1] + summands[k - 1].state_count();

    std::vector<StateSet> family;
    family.reserve(total_properties);
    for_each_product(summands, offsets,
                     [&family](std::span<const ElemId>, StateSet mask) { family.push_back(mask); });

    return FiniteSps::from_closure(
        FiniteClosureSystem::from_closed_sets(merged_state_names(summands), std::move(family)));
}

std::pair<FiniteSps, OrthoMap> direct_sum(std::span<const FiniteSps> summands,
                                          std::span<const OrthoMap> orthos) {
    if (orthos.size() != summands.size())
        throw Error(Errc::invalid_ortho, "one orthocomplementation per summand required");
    FiniteSps sum = direct_sum(summands);

    std::vector<std::size_t> offsets(summands.size(), 0);
    for (std::size_t k = 1; k < summands.size(); ++k)
        offsets[k] = offsets[k - 1] + summands[k - 1].state_count();

    OrthoMap map;
    map.image.resize(sum.property_count());
    for_each_product(summands, offsets, [&](std::span<const ElemId> tuple, StateSet mask) {
        StateSet complement_mask = 0;
        for (std::size_t k = 0; k < summands.size(); ++k)
            complement_mask |= summands[k].cartan_table()[orthos[k].image[tuple[k]]] << offsets[k];
        map.image[sum.property_of(mask)] = sum.property_of(complement_mask);
    });
    return {std::move(sum), std::move(map)};
}

namespace {

using Profile = std::vector<std::uint32_t>;

std::vector<Profile> state_profiles(const FiniteSps& s) {
    std::vector<Profile> profiles(s.state_count());
    for (StateId p = 0; p < s.state_count(); ++p) {
        for (const StateSet mask : s.cartan_table())
            if (contains_state(mask, p))
                profiles[p].push_back(static_cast<std::uint32_t>(set_size(mask)));
        std::sort(profiles[p].begin(), profiles[p].end());
    }
    return profiles;
}

struct IsoSearch {
    const FiniteSps& lhs;
    const FiniteSps& rhs;
    std::vector<std::vector<StateId>> candidates; // per lhs state
    std::vector<StateId> order;                   // lhs states, most constrained first
    std::vector<StateId> sigma;                   // lhs state -> rhs state
    std::vector<bool> used;
    std::vector<ElemSet> rhs_member_of;           // per rhs state: members containing it
    std::vector<ElemSet> compat;                  // per lhs member: candidate rhs members

    bool assign(std::size_t depth) {
        if (depth == order.size()) return check_full();
        const StateId p = order[depth];
        for (StateId q : candidates[p]) {
            if (used[q]) continue;
            std::vector<ElemSet> saved = compat;
            bool feasible = true;
            for (std::size_t i = 0; i < compat.size() && feasible; ++i) {
                if (contains_state(lhs.cartan_table()[i], p))
                    compat[i] &= rhs_member_of[q];
                else
                    compat[i] -= rhs_member_of[q];
                feasible = compat[i].any();
            }
            if (feasible) {
                used[q] = true;
                sigma[p] = q;
                if (assign(depth + 1)) return true;
                used[q] = false;
            }
            compat = std::move(saved);
        }
        return false;
    }

    StateSet map_mask(StateSet mask) const {
        StateSet out = 0;
        for (std::size_t p : set_members(mask)) out |= state_bit(sigma[p]);
        return out;
    }

    bool check_full() const {
        for (const StateSet mask : lhs.cartan_table())
            if (!rhs.try_property_of(map_mask(mask))) return false;
        return true;
    }
};

} // namespace

std::optional<SpsIsomorphism> find_isomorphism(const FiniteSps& lhs, const FiniteSps& rhs,
                                               std::size_t cap) {
    if (!lhs.canonical() || !rhs.canonical())
        throw Error(Errc::incompatible_structure,
                    "isomorphism search requires systems satisfying the defining axioms");
    if (lhs.state_count() > cap || rhs.state_count() > cap)
        throw Error(Errc::size_cap_exceeded, "isomorphism search cap exceeded");

    if (lhs.state_count() != rhs.state_count() || lhs.property_count() != rhs.property_count())
        return std::nullopt;

    std::vector<std::uint64_t> lhs_sizes, rhs_sizes;
    for (StateSet mask : lhs.cartan_table()) lhs_sizes.push_back(set_size(mask));
    for (StateSet mask : rhs.cartan_table()) rhs_sizes.push_back(set_size(mask));
    std::sort(lhs_sizes.begin(), lhs_sizes.end());
    std::sort(rhs_sizes.begin(), rhs_sizes.end());
    if (lhs_sizes != rhs_sizes) return std::nullopt;

    const auto lhs_profiles = state_profiles(lhs);
    const auto rhs_profiles = state_profiles(rhs);

    IsoSearch search{lhs, rhs, {}, {}, {}, {}, {}, {}};
    search.candidates.resize(lhs.state_count());
    for (StateId p = 0; p < lhs.state_count(); ++p) {
        for (StateId q = 0; q < rhs.state_count(); ++q)
            if (lhs_profiles[p] == rhs_profiles[q]) search.candidates[p].push_back(q);
        if (search.candidates[p].empty()) return std::nullopt;
    }

    search.order.resize(lhs.state_count());
    std::iota(search.order.begin(), search.order.end(), 0);
    std::stable_sort(search.order.begin(), search.order.end(), [&search](StateId a, StateId b) {
        return search.candidates[a].size() < search.candidates[b].size();
    });

    search.sigma.assign(lhs.state_count(), 0);
    search.used.assign(rhs.state_count(), false);
    search.rhs_member_of.assign(rhs.state_count(), ElemSet(rhs.property_count()));
    for (ElemId a = 0; a < rhs.property_count(); ++a)
        for (std::size_t q : set_members(rhs.cartan_table()[a]))
            search.rhs_member_of[q].set(a);
    search.compat.assign(lhs.property_count(), ElemSet(rhs.property_count()));
    for (ElemId a = 0; a < lhs.property_count(); ++a)
        for (ElemId b = 0; b < rhs.property_count(); ++b)
            if (set_size(lhs.cartan_table()[a]) == set_size(rhs.cartan_table()[b]))
                search.compat[a].set(b);

    if (!search.assign(0)) return std::nullopt;

    SpsIsomorphism iso;
    iso.state_map = search.sigma;
    iso.property_map.resize(lhs.property_count());
    for (ElemId a = 0; a < lhs.property_count(); ++a)
        iso.property_map[a] = rhs.property_of(search.map_mask(lhs.cartan_table()[a]));
    return iso;
}

} // namespace spslab
