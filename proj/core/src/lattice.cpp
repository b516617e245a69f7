// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/lattice.hpp"

#include <algorithm>

namespace spslab {

FiniteLattice FiniteLattice::build(std::vector<std::string> names,
                                   const std::function<bool(std::size_t, std::size_t)>& leq) {
    FiniteLattice l;
    l.n_ = names.size();
    l.names_ = std::move(names);
    if (l.n_ == 0) throw Error(Errc::not_a_lattice, "empty carrier");

    l.below_.assign(l.n_, ElemSet(l.n_));
    for (std::size_t y = 0; y < l.n_; ++y)
        for (std::size_t x = 0; x < l.n_; ++x)
            if (leq(x, y)) l.below_[y].set(x);

    for (std::size_t x = 0; x < l.n_; ++x)
        if (!l.below_[x].test(x))
            throw Error(Errc::not_a_partial_order, "relation not reflexive at " + l.names_[x]);
    for (std::size_t x = 0; x < l.n_; ++x)
        for (std::size_t y = x + 1; y < l.n_; ++y)
            if (l.below_[y].test(x) && l.below_[x].test(y))
                throw Error(Errc::not_a_partial_order,
                            "relation not antisymmetric on (" + l.names_[x] + ", " + l.names_[y] + ")");
    for (std::size_t y = 0; y < l.n_; ++y)
        for (std::size_t x = l.below_[y].find_first(); x != ElemSet::npos;
             x = l.below_[y].find_next(x))
            if (!l.below_[x].is_subset_of(l.below_[y]))
                throw Error(Errc::not_a_partial_order,
                            "relation not transitive through (" + l.names_[x] + ", " + l.names_[y] + ")");

    l.finish_construction(/*validate_pairs=*/true);
    return l;
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> names,
                                         const std::vector<std::pair<ElemId, ElemId>>& covers) {
    const std::size_t n = names.size();
    std::vector<ElemSet> below(n, ElemSet(n));
    for (std::size_t x = 0; x < n; ++x) below[x].set(x);
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw Error(Errc::not_a_lattice, "cover pair out of range");
        below[hi].set(lo);
    }
    // Warshall-style closure over the cover edges.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t y = 0; y < n; ++y) {
            ElemSet acc = below[y];
            for (std::size_t x = below[y].find_first(); x != ElemSet::npos;
                 x = below[y].find_next(x))
                acc |= below[x];
            if (acc != below[y]) {
                below[y] = std::move(acc);
                changed = true;
            }
        }
    }
    return build(std::move(names),
                 [&below](std::size_t x, std::size_t y) { return below[y].test(x); });
}

FiniteLattice FiniteLattice::from_known_lattice(std::vector<std::string> names,
                                                std::vector<ElemSet> below_rows) {
    FiniteLattice l;
    l.n_ = names.size();
    l.names_ = std::move(names);
    l.below_ = std::move(below_rows);
    if (l.n_ == 0) throw Error(Errc::not_a_lattice, "empty carrier");
    l.finish_construction(/*validate_pairs=*/false);
    return l;
}

void FiniteLattice::finish_construction(bool validate_pairs) {
    above_.assign(n_, ElemSet(n_));
    for (std::size_t y = 0; y < n_; ++y)
        for (std::size_t x = below_[y].find_first(); x != ElemSet::npos; x = below_[y].find_next(x))
            above_[x].set(y);

    const bool tables = n_ <= kTableLimit;
    if (tables) {
        meet_table_.assign(n_ * n_, 0);
        join_table_.assign(n_ * n_, 0);
    }
    if (tables || validate_pairs) {
        for (std::size_t x = 0; x < n_; ++x) {
            for (std::size_t y = x; y < n_; ++y) {
                ElemSet common = below_[x] & below_[y];
                ElemId glb = n_;
                for (std::size_t z = common.find_first(); z != ElemSet::npos;
                     z = common.find_next(z))
                    if (common.is_subset_of(below_[z])) { glb = static_cast<ElemId>(z); break; }
                if (glb == n_)
                    throw Error(Errc::not_a_lattice, "pair (" + names_[x] + ", " + names_[y] +
                                                         ") has no greatest lower bound");
                ElemSet upper = above_[x] & above_[y];
                ElemId lub = n_;
                for (std::size_t z = upper.find_first(); z != ElemSet::npos;
                     z = upper.find_next(z))
                    if (upper.is_subset_of(above_[z])) { lub = static_cast<ElemId>(z); break; }
                if (lub == n_)
                    throw Error(Errc::not_a_lattice, "pair (" + names_[x] + ", " + names_[y] +
                                                         ") has no least upper bound");
                if (tables) {
                    meet_table_[x * n_ + y] = meet_table_[y * n_ + x] = glb;
                    join_table_[x * n_ + y] = join_table_[y * n_ + x] = lub;
                }
            }
        }
    }

    // With all binary bounds present the global bounds exist.
    bool found_bottom = false, found_top = false;
    for (std::size_t x = 0; x < n_; ++x) {
        if (above_[x].count() == n_) { bottom_ = static_cast<ElemId>(x); found_bottom = true; }
        if (below_[x].count() == n_) { top_ = static_cast<ElemId>(x); found_top = true; }
    }
    if (!found_bottom) throw Error(Errc::not_a_lattice, "no bottom element");
    if (!found_top) throw Error(Errc::not_a_lattice, "no top element");
}

ElemId FiniteLattice::glb_scan(ElemId x, ElemId y) const {
    ElemSet common = below_[x] & below_[y];
    for (std::size_t z = common.find_first(); z != ElemSet::npos; z = common.find_next(z))
        if (common.is_subset_of(below_[z])) return static_cast<ElemId>(z);
    throw Error(Errc::not_a_lattice,
                "pair (" + names_[x] + ", " + names_[y] + ") has no greatest lower bound");
}

ElemId FiniteLattice::lub_scan(ElemId x, ElemId y) const {
    ElemSet upper = above_[x] & above_[y];
    for (std::size_t z = upper.find_first(); z != ElemSet::npos; z = upper.find_next(z))
        if (upper.is_subset_of(above_[z])) return static_cast<ElemId>(z);
    throw Error(Errc::not_a_lattice,
                "pair (" + names_[x] + ", " + names_[y] + ") has no least upper bound");
}

ElemId FiniteLattice::meet(ElemId x, ElemId y) const {
    return meet_table_.empty() ? glb_scan(x, y) : meet_table_[x * n_ + y];
}

ElemId FiniteLattice::join(ElemId x, ElemId y) const {
    return join_table_.empty() ? lub_scan(x, y) : join_table_[x * n_ + y];
}

ElemId FiniteLattice::meet_all(std::span<const ElemId> xs) const {
    ElemId acc = top_;
    for (ElemId x : xs) acc = meet(acc, x);
    return acc;
}

ElemId FiniteLattice::join_all(std::span<const ElemId> xs) const {
    ElemId acc = bottom_;
    for (ElemId x : xs) acc = join(acc, x);
    return acc;
}

std::vector<ElemId> FiniteLattice::atoms() const {
    std::vector<ElemId> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (x != bottom_ && below_[x].count() == 2) out.push_back(static_cast<ElemId>(x));
    return out;
}

std::vector<ElemId> FiniteLattice::coatoms() const {
    std::vector<ElemId> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (x != top_ && above_[x].count() == 2) out.push_back(static_cast<ElemId>(x));
    return out;
}

std::vector<ElemId> FiniteLattice::lower_covers(ElemId x) const {
    // Maximal elements of below(x) \ {x}.
    std::vector<ElemId> out;
    ElemSet strict = below_[x];
    strict.reset(x);
    for (std::size_t y = strict.find_first(); y != ElemSet::npos; y = strict.find_next(y)) {
        bool maximal = true;
        for (std::size_t z = strict.find_first(); z != ElemSet::npos; z = strict.find_next(z))
            if (z != y && below_[z].test(y)) { maximal = false; break; }
        if (maximal) out.push_back(static_cast<ElemId>(y));
    }
    return out;
}

std::vector<ElemId> FiniteLattice::upper_covers(ElemId x) const {
    std::vector<ElemId> out;
    ElemSet strict = above_[x];
    strict.reset(x);
    for (std::size_t y = strict.find_first(); y != ElemSet::npos; y = strict.find_next(y)) {
        bool minimal = true;
        for (std::size_t z = strict.find_first(); z != ElemSet::npos; z = strict.find_next(z))
            if (z != y && above_[z].test(y)) { minimal = false; break; }
        if (minimal) out.push_back(static_cast<ElemId>(y));
    }
    return out;
}

std::vector<ElemId> FiniteLattice::join_irreducibles() const {
    std::vector<ElemId> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (x != bottom_ && lower_covers(static_cast<ElemId>(x)).size() == 1)
            out.push_back(static_cast<ElemId>(x));
    return out;
}

std::vector<ElemId> FiniteLattice::meet_irreducibles() const {
    std::vector<ElemId> out;
    for (std::size_t x = 0; x < n_; ++x)
        if (x != top_ && upper_covers(static_cast<ElemId>(x)).size() == 1)
            out.push_back(static_cast<ElemId>(x));
    return out;
}

bool FiniteLattice::is_atomistic() const {
    const auto at = atoms();
    for (std::size_t x = 0; x < n_; ++x) {
        ElemId acc = bottom_;
        for (ElemId a : at)
            if (below_[x].test(a)) acc = join(acc, a);
        if (acc != x) return false;
    }
    return true;
}

bool FiniteLattice::is_distributive() const {
    for (ElemId x = 0; x < n_; ++x)
        for (ElemId y = 0; y < n_; ++y)
            for (ElemId z = 0; z < n_; ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
    return true;
}

bool FiniteLattice::is_boolean() const {
    if (!is_distributive()) return false;
    for (ElemId x = 0; x < n_; ++x) {
        bool complemented = false;
        for (ElemId y = 0; y < n_; ++y)
            if (meet(x, y) == bottom_ && join(x, y) == top_) { complemented = true; break; }
        if (!complemented) return false;
    }
    return true;
}

OrthoVerdict verify_ortho(const FiniteLattice& lattice, const OrthoMap& map) {
    const std::size_t n = lattice.size();
    if (map.image.size() != n)
        throw Error(Errc::invalid_ortho, "complement map is not total on the lattice");
    for (ElemId x = 0; x < n; ++x)
        if (map.image[x] >= n)
            throw Error(Errc::invalid_ortho, "complement map image out of range");

    OrthoVerdict v;
    for (ElemId x = 0; x < n && v.involution_ok; ++x)
        if (map(map(x)) != x) {
            v.involution_ok = false;
            v.involution_witness = x;
        }
    for (ElemId x = 0; x < n && v.order_reversing_ok; ++x)
        for (ElemId y = 0; y < n; ++y)
            if (lattice.leq(x, y) && !lattice.leq(map(y), map(x))) {
                v.order_reversing_ok = false;
                v.order_witness = std::make_pair(x, y);
                break;
            }
    for (ElemId x = 0; x < n && v.meet_complement_ok; ++x)
        if (lattice.meet(x, map(x)) != lattice.bottom()) {
            v.meet_complement_ok = false;
            v.meet_witness = x;
        }
    for (ElemId x = 0; x < n && v.join_complement_ok; ++x)
        if (lattice.join(x, map(x)) != lattice.top()) {
            v.join_complement_ok = false;
            v.join_witness = x;
        }
    return v;
}

namespace {

// Backtracking state for the orthocomplementation search. An
// anti-automorphism maps join-irreducibles bijectively onto
// meet-irreducibles and is determined everywhere by that restriction:
// theta(x) = meet of theta over the join-irreducibles below x.
struct OrthoSearch {
    const FiniteLattice& l;
    std::vector<ElemId> ji, mi;
    std::vector<ElemId> assigned;  // per ji index, mi value or invalid
    std::vector<bool> used;        // per mi index
    std::vector<OrthoMap> found;

    explicit OrthoSearch(const FiniteLattice& lattice) : l(lattice) {}

    bool candidate_ok(std::size_t ji_idx, std::size_t mi_idx) const {
        const ElemId j = ji[ji_idx], m = mi[mi_idx];
        if (l.below(j).count() != l.above(m).count()) return false;
        if (l.meet(j, m) != l.bottom() || l.join(j, m) != l.top()) return false;
        for (std::size_t k = 0; k < ji_idx; ++k) {
            const ElemId j2 = ji[k], m2 = assigned[k];
            if (l.leq(j, j2) != l.leq(m2, m)) return false;
            if (l.leq(j2, j) != l.leq(m, m2)) return false;
        }
        return true;
    }

    void extend_and_check() {
        const std::size_t n = l.size();
        OrthoMap theta;
        theta.image.resize(n);
        std::vector<ElemId> images;
        for (ElemId x = 0; x < n; ++x) {
            images.clear();
            for (std::size_t k = 0; k < ji.size(); ++k)
                if (l.leq(ji[k], x)) images.push_back(assigned[k]);
            theta.image[x] = l.meet_all(images);
        }
        if (verify_ortho(l, theta).pass()) found.push_back(std::move(theta));
    }

    void run(std::size_t ji_idx) {
        if (ji_idx == ji.size()) {
            extend_and_check();
            return;
        }
        for (std::size_t m = 0; m < mi.size(); ++m) {
            if (used[m] || !candidate_ok(ji_idx, m)) continue;
            used[m] = true;
            assigned[ji_idx] = mi[m];
            run(ji_idx + 1);
            used[m] = false;
        }
    }
};

} // namespace

std::vector<OrthoMap> enumerate_orthos(const FiniteLattice& lattice, std::size_t cap) {
    if (lattice.size() > cap)
        throw Error(Errc::size_cap_exceeded,
                    "lattice has " + std::to_string(lattice.size()) +
                        " elements, enumeration cap is " + std::to_string(cap));
    OrthoSearch search(lattice);
    search.ji = lattice.join_irreducibles();
    search.mi = lattice.meet_irreducibles();
    if (search.ji.size() != search.mi.size()) return {};
    search.assigned.assign(search.ji.size(), 0);
    search.used.assign(search.mi.size(), false);
    search.run(0);
    std::sort(search.found.begin(), search.found.end(),
              [](const OrthoMap& a, const OrthoMap& b) { return a.image < b.image; });
    return search.found;
}

std::vector<ElemId> central_elements(const FiniteLattice& lattice, const OrthoMap& map) {
    if (!verify_ortho(lattice, map).pass())
        throw Error(Errc::invalid_ortho, "map fails the orthocomplementation axioms");
    std::vector<ElemId> out;
    const std::size_t n = lattice.size();
    for (ElemId a = 0; a < n; ++a) {
        bool central = true;
        for (ElemId b = 0; b < n; ++b)
            if (lattice.join(lattice.meet(b, a), lattice.meet(b, map(a))) != b) {
                central = false;
                break;
            }
        if (central) out.push_back(a);
    }
    return out;
}

} // namespace spslab
