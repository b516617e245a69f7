// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "spslab/classical.hpp"
#include "spslab/topological.hpp"
#include "support/fixtures.hpp"

using namespace spslab;
using namespace spslab::testing;

namespace {

std::vector<ElemId> bounds_of(const FiniteSps& s) {
    std::vector<ElemId> out = {s.bottom_property(), s.top_property()};
    std::sort(out.begin(), out.end());
    return out;
}

// Direct reading of the definition: kappa(a \/ b) inside kappa(a) u kappa(b)
// for every b, with the join taken in the property lattice.
bool oracle_topological(const FiniteSps& s, ElemId a) {
    for (ElemId b = 0; b < s.property_count(); ++b) {
        const ElemId j = s.lattice().join(a, b);
        if (!subset_of(s.cartan(j), s.cartan(a) | s.cartan(b))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("the top property is always topological") {
    for (const FiniteSps& s : {fano_sps(), mo_sps(2), sierpinski_sps(), discrete_sps(3)})
        CHECK(is_topological(s, s.top_property()));
}

TEST_CASE("projective singletons are not topological") {
    const FiniteSps s = fano_sps();
    const ElemId singleton = s.property_of(state_bit(0));
    CHECK_FALSE(is_topological(s, singleton));
    // witness reading: joining two points gives the whole line
    CHECK_FALSE(oracle_topological(s, singleton));
}

TEST_CASE("every property of a topology-backed system is topological") {
    CounterRng rng(555, 4);
    for (int i = 0; i < 10; ++i) {
        const FiniteTopology t = random_topology(rng, 1 + rng.next_below(4));
        const FiniteSps s = FiniteSps::from_closure(t.closed_sets());
        for (ElemId a = 0; a < s.property_count(); ++a) CHECK(is_topological(s, a));
    }
}

TEST_CASE("the union-stability scan matches the definitional scan") {
    CounterRng rng(777, 5);
    for (int i = 0; i < 25; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        for (ElemId a = 0; a < s.property_count(); ++a)
            CHECK(is_topological(s, a) == oracle_topological(s, a));
    }
}

TEST_CASE("topological property sets of the fixtures") {
    CHECK(topological_properties(fano_sps()) == bounds_of(fano_sps()));
    CHECK(topological_properties(mo_sps(2)) == bounds_of(mo_sps(2)));
    const FiniteSps sier = sierpinski_sps();
    CHECK(topological_properties(sier).size() == sier.property_count());
}

TEST_CASE("topological states of the two-point non-discrete system") {
    const FiniteSps s = sierpinski_sps();
    const StateId p = *s.state_named("p");
    const StateId q = *s.state_named("q");
    CHECK(s.cartan(topological_state_of(s, q)) == state_bit(q));
    CHECK(topological_state_of(s, p) == s.top_property());
}

TEST_CASE("the projective fixture has a single topological state") {
    const FiniteSps s = fano_sps();
    const auto t_states = topological_state_space(s);
    REQUIRE(t_states.size() == 1);
    CHECK(t_states[0] == s.top_property());
}

TEST_CASE("topological Cartan map") {
    const FiniteSps s = sierpinski_sps();
    CHECK(topological_cartan(s, s.top_property()) == topological_state_space(s));
    CHECK(topological_cartan(s, s.bottom_property()).empty());
    const ElemId q_closed = s.property_of(state_bit(*s.state_named("q")));
    const auto image = topological_cartan(s, q_closed);
    REQUIRE(image.size() == 1);
    CHECK(image[0] == q_closed);

    CHECK_THROWS_AS(topological_cartan(fano_sps(), fano_sps().property_of(state_bit(0))),
                    Error);
}

TEST_CASE("subsystem of topological states is trivial for the projective fixture") {
    const FiniteSps sub = t_classical_system(fano_sps());
    CHECK(sub.state_count() == 1);
    CHECK(sub.property_count() == 2);
    CHECK(verify_axioms(sub).pass());
    CHECK(is_t_classical(sub));
}

TEST_CASE("an additive system is its own subsystem of topological states") {
    const FiniteSps s = sierpinski_sps();
    REQUIRE(find_isomorphism(t_classical_system(s), s).has_value());
}

TEST_CASE("subsystem construction is additive on random systems") {
    CounterRng rng(4242, 6);
    for (int i = 0; i < 20; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        const FiniteSps sub = t_classical_system(s);
        CHECK(verify_axioms(sub).pass());
        CHECK(is_t_classical(sub));
        CHECK(to_closure(sub).is_additive());
    }
}

TEST_CASE("join inside the topological properties") {
    const FiniteSps s = sierpinski_sps();
    const ElemId q_closed = s.property_of(state_bit(*s.state_named("q")));
    const ElemId singles[] = {q_closed};
    CHECK(tilde_join(s, singles) == q_closed);
    CHECK(tilde_join(s, {}) == s.bottom_property());
    const ElemId pair[] = {q_closed, s.top_property()};
    CHECK(tilde_join(s, pair) == s.top_property());

    const FiniteSps fano = fano_sps();
    const ElemId bad[] = {fano.property_of(state_bit(0))};
    CHECK_THROWS_AS(tilde_join(fano, bad), Error);
}

TEST_CASE("additivity flag matches the closure translation") {
    CHECK(is_t_classical(sierpinski_sps()));
    CHECK(is_t_classical(discrete_sps(3)));
    CHECK_FALSE(is_t_classical(fano_sps()));
    CHECK_FALSE(is_t_classical(mo_sps(2)));
    CounterRng rng(99, 9);
    for (int i = 0; i < 20; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        CHECK(is_t_classical(s) == to_closure(s).is_additive());
        // additivity holds exactly when every property is topological
        CHECK(is_t_classical(s) ==
              (topological_properties(s).size() == s.property_count()));
    }
}

TEST_CASE("meet and finite-join closure of the topological set") {
    CounterRng rng(123, 7);
    for (int i = 0; i < 25; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        const auto top_set = topological_properties(s);
        std::vector<bool> topological(s.property_count(), false);
        for (ElemId a : top_set) topological[a] = true;
        for (ElemId a : top_set)
            for (ElemId b : top_set) {
                CHECK(topological[s.prop_meet(a, b)]);
                const ElemId j = s.prop_join(a, b);
                CHECK(topological[j]);
                CHECK(s.cartan(j) == (s.cartan(a) | s.cartan(b)));
            }
    }
}

TEST_CASE("states inside a topological state's image have smaller topological states") {
    CounterRng rng(321, 2);
    for (int i = 0; i < 20; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        const TopologicalAnalysis analysis = analyze_topological(s);
        for (StateId p = 0; p < s.state_count(); ++p)
            for (std::size_t q : set_members(s.cartan(analysis.tau_of[p])))
                CHECK(s.lattice().leq(analysis.tau_of[q], analysis.tau_of[p]));
    }
}

TEST_CASE("unconditional state identity holds everywhere") {
    CounterRng rng(2718, 1);
    for (int i = 0; i < 30; ++i) {
        const FiniteSps s = random_sps(rng, 6);
        const auto report = check_topological_state_identities(s, {});
        CHECK(report.unconditional_ok);
    }
}

TEST_CASE("conditional identities with a full pseudo-inverse battery") {
    CounterRng rng(1618, 2);
    for (int i = 0; i < 20; ++i) {
        const FiniteSps s = random_sps(rng, 5);
        std::vector<TestPair> tests;
        for (ElemId a = 0; a < s.property_count(); ++a)
            tests.push_back({a, s.property_closure(s.full_state_set() & ~s.cartan(a))});
        const auto report = check_topological_state_identities(s, tests);
        CHECK(report.unconditional_ok);
        CHECK(report.condition_holds);  // everything is operationally classical here
        CHECK(report.state_join_identity_ok);
        CHECK(report.image_union_identity_ok);
        CHECK(report.pass());
    }
}

TEST_CASE("the condition is skipped when the bottom is not operationally classical") {
    const auto report = check_topological_state_identities(fano_sps(), {});
    CHECK(report.unconditional_ok);
    CHECK_FALSE(report.condition_holds);
    CHECK(report.pass());
}

TEST_CASE("coverage structure of the fixtures") {
    SUBCASE("two-point discrete: both families partition") {
        const FiniteSps s = discrete_sps(2);
        const OrthoMap ortho = complement_ortho(s);
        std::vector<TestPair> tests;
        for (ElemId a = 0; a < s.property_count(); ++a) tests.push_back({a, ortho(a)});
        const CoverageReport report = coverage_structure(s, tests);
        CHECK(report.topological.partition);
        CHECK(report.operational.partition);
        CHECK(report.topological.covers);
        CHECK(report.operational.covers);
    }
    SUBCASE("projective fixture: the topological family is the trivial partition") {
        const CoverageReport report = coverage_structure(fano_sps(), {});
        REQUIRE(report.topological.blocks.size() == 1);
        CHECK(report.topological.blocks[0] == fano_sps().full_state_set());
        CHECK(report.topological.partition);
    }
}

TEST_CASE("analysis bundles are consistent with the scalar operations") {
    const FiniteSps s = sierpinski_sps();
    const TopologicalAnalysis analysis = analyze_topological(s);
    CHECK(analysis.top_set == topological_properties(s));
    for (StateId p = 0; p < s.state_count(); ++p)
        CHECK(analysis.tau_of[p] == topological_state_of(s, p));
    CHECK(analysis.t_states == topological_state_space(s));
}
