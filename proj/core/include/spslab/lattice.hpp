// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "spslab/errors.hpp"

namespace spslab {

using ElemId = std::uint32_t;
using ElemSet = boost::dynamic_bitset<>;

/// Default cap on element counts for the exhaustive searches (ortho
/// enumeration, isomorphism search). Overridable per call; the CLI also honors
/// the SPSLAB_SIZE_CAP environment variable.
inline constexpr std::size_t kDefaultSizeCap = 64;

/// A finite bounded lattice: a partial order on indexed elements in which
/// every pair has a meet and a join (finiteness then gives all of them).
/// Instances are immutable after construction and safe to share across
/// threads.
class FiniteLattice {
public:
    /// Empty placeholder; use the named constructors below for real lattices.
    FiniteLattice() = default;

    std::size_t size() const { return n_; }
    const std::string& name(ElemId x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(ElemId x, ElemId y) const { return below_[y].test(x); }
    bool lt(ElemId x, ElemId y) const { return x != y && leq(x, y); }

    /// All z with z <= x (resp. x <= z).
    const ElemSet& below(ElemId x) const { return below_[x]; }
    const ElemSet& above(ElemId x) const { return above_[x]; }

    ElemId bottom() const { return bottom_; }
    ElemId top() const { return top_; }

    ElemId meet(ElemId x, ElemId y) const;
    ElemId join(ElemId x, ElemId y) const;

    /// Meet of a family; the empty meet is the top element.
    ElemId meet_all(std::span<const ElemId> xs) const;
    /// Join of a family; the empty join is the bottom element.
    ElemId join_all(std::span<const ElemId> xs) const;

    std::vector<ElemId> atoms() const;
    std::vector<ElemId> coatoms() const;
    /// y is a lower cover of x: y < x with nothing strictly between.
    std::vector<ElemId> lower_covers(ElemId x) const;
    std::vector<ElemId> upper_covers(ElemId x) const;
    /// Elements with exactly one lower (resp. upper) cover.
    std::vector<ElemId> join_irreducibles() const;
    std::vector<ElemId> meet_irreducibles() const;

    bool is_atomistic() const;
    bool is_distributive() const;
    /// Distributive and every element complemented.
    bool is_boolean() const;

    /// Validating constructor: checks the partial-order laws and the
    /// existence of all binary meets/joins and of 0 and 1.
    /// Throws Error{not_a_partial_order} or Error{not_a_lattice}, naming the
    /// offending element or pair.
    static FiniteLattice build(std::vector<std::string> names,
                               const std::function<bool(std::size_t, std::size_t)>& leq);

    /// Reflexive-transitive closure of a covering relation, then build().
    static FiniteLattice from_covers(std::vector<std::string> names,
                                     const std::vector<std::pair<ElemId, ElemId>>& covers);

    /// Trusted constructor for orders known to be lattices (e.g. an
    /// intersection-closed set family under inclusion). Skips pair
    /// validation; bounds are still located.
    static FiniteLattice from_known_lattice(std::vector<std::string> names,
                                            std::vector<ElemSet> below_rows);

private:
    void finish_construction(bool validate_pairs);
    ElemId glb_scan(ElemId x, ElemId y) const;
    ElemId lub_scan(ElemId x, ElemId y) const;

    std::size_t n_ = 0;
    std::vector<std::string> names_;
    std::vector<ElemSet> below_;
    std::vector<ElemSet> above_;
    ElemId bottom_ = 0;
    ElemId top_ = 0;
    // Meet/join tables are materialized only up to this size; larger lattices
    // answer per query from the order rows.
    static constexpr std::size_t kTableLimit = 512;
    std::vector<ElemId> meet_table_;
    std::vector<ElemId> join_table_;
};

/// An orthocomplementation candidate: a total element map on a lattice.
struct OrthoMap {
    std::vector<ElemId> image;

    ElemId operator()(ElemId x) const { return image[x]; }
    bool operator==(const OrthoMap&) const = default;
};

/// Outcome of checking the four orthocomplementation axioms, with a witness
/// for each failed one.
struct OrthoVerdict {
    bool involution_ok = true;                 // (a')' = a
    bool order_reversing_ok = true;            // a <= b  =>  b' <= a'
    bool meet_complement_ok = true;            // a /\ a' = 0
    bool join_complement_ok = true;            // a \/ a' = 1
    std::optional<ElemId> involution_witness;
    std::optional<std::pair<ElemId, ElemId>> order_witness;
    std::optional<ElemId> meet_witness;
    std::optional<ElemId> join_witness;

    bool pass() const {
        return involution_ok && order_reversing_ok && meet_complement_ok && join_complement_ok;
    }
};

OrthoVerdict verify_ortho(const FiniteLattice& lattice, const OrthoMap& map);

/// All orthocomplementations of the lattice, in lexicographic order of the
/// image vector. An empty result certifies that none exists. Throws
/// Error{size_cap_exceeded} when the lattice has more than `cap` elements.
std::vector<OrthoMap> enumerate_orthos(const FiniteLattice& lattice,
                                       std::size_t cap = kDefaultSizeCap);

/// Elements a with b = (b /\ a) \/ (b /\ a') for every b. Requires a valid
/// orthocomplementation (throws Error{invalid_ortho} otherwise).
std::vector<ElemId> central_elements(const FiniteLattice& lattice, const OrthoMap& map);

} // namespace spslab
