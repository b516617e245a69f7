// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "spslab/classical.hpp"
#include "spslab/document.hpp"
#include "spslab/topological.hpp"
#include "support/fixtures.hpp"

using namespace spslab;
using namespace spslab::testing;

TEST_CASE("sps documents parse into masks over document state order") {
    const ParsedDocument doc = parse_document(R"(
# comment
sps
states: p q r
set:
set: p q   # trailing comment
set: p q r
ortho: [] [p q r]
test: [p q] [p q r]
)");
    REQUIRE(doc.kind == DocumentKind::sps);
    const SpsDocument& sps = *doc.sps;
    CHECK(sps.states == std::vector<std::string>{"p", "q", "r"});
    CHECK(sps.closed_sets == std::vector<StateSet>{0, 0b011, 0b111});
    REQUIRE(sps.ortho_pairs.size() == 1);
    CHECK(sps.ortho_pairs[0] == std::make_pair(StateSet{0}, StateSet{0b111}));
    REQUIRE(sps.test_pairs.size() == 1);
    CHECK(sps.test_pairs[0] == std::make_pair(StateSet{0b011}, StateSet{0b111}));
}

TEST_CASE("parse errors carry positions") {
    const auto expect_error = [](std::string_view text, std::string_view needle) {
        try {
            parse_document(text);
            FAIL("expected a parse error for: ", needle);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            CHECK(e.line().has_value());
        }
    };
    expect_error("", "empty document");
    expect_error("granola\n", "unknown document kind");
    expect_error("sps\nstates: p p\n", "duplicate state name");
    expect_error("sps\nstates: p\nset: x\n", "unknown state name");
    expect_error("sps\nstates: p\nset: p\northo: [p] [p", "unterminated property literal");
    expect_error("sps\nstates: p\nbogus: 1\n", "unknown keyword");
    expect_error("sps\nstates: p\nset: p\nset: p\n", "duplicate closed set");
    expect_error("lattice\nelements: a b\ncover: a\n", "exactly two element names");
    expect_error("model\nepsilon: banana\n", "malformed number");
}

TEST_CASE("documents round trip through write and parse") {
    const FiniteSps s = mo_sps(2);
    const OrthoMap ortho = mo_ortho(s, 2);
    const std::vector<TestPair> tests = {{s.property_of(state_bit(0)), s.property_of(state_bit(2))}};

    const std::string text = write_sps_document(s, &ortho, tests);
    const ParsedDocument parsed = parse_document(text);
    REQUIRE(parsed.kind == DocumentKind::sps);
    const FiniteSps reread = sps_from_document(*parsed.sps);
    REQUIRE(find_isomorphism(s, reread).has_value());

    const auto reread_ortho = ortho_from_document(reread, *parsed.sps);
    REQUIRE(reread_ortho.has_value());
    CHECK(verify_ortho(reread.lattice(), *reread_ortho).pass());

    const auto reread_tests = tests_from_document(reread, *parsed.sps);
    REQUIRE(reread_tests.size() == 1);
    CHECK(reread.cartan(reread_tests[0].yes) == s.cartan(tests[0].yes));
}

TEST_CASE("complement pairs must cover every property") {
    const ParsedDocument parsed = parse_document(R"(
sps
states: p q
set:
set: p
set: q
set: p q
ortho: [p] [q]
)");
    const FiniteSps s = sps_from_document(*parsed.sps);
    CHECK_THROWS_AS(ortho_from_document(s, *parsed.sps), Error);
    try {
        ortho_from_document(s, *parsed.sps);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_ortho);
    }
}

TEST_CASE("pairs naming unknown sets are domain errors") {
    const ParsedDocument parsed = parse_document(R"(
sps
states: p q
set:
set: p q
test: [p] [q]
)");
    const FiniteSps s = sps_from_document(*parsed.sps);
    CHECK_THROWS_AS(tests_from_document(s, *parsed.sps), Error);
}

TEST_CASE("lattice documents build from covering pairs") {
    const ParsedDocument parsed = parse_document(R"(
lattice
elements: zero a b one
cover: zero a
cover: zero b
cover: a one
cover: b one
)");
    REQUIRE(parsed.kind == DocumentKind::lattice);
    const FiniteLattice l = lattice_from_document(*parsed.lattice);
    CHECK(l.size() == 4);
    CHECK(l.is_boolean());
    CHECK(l.bottom() == 0);
    CHECK(l.top() == 3);

    const std::string text = write_lattice_document(l);
    const ParsedDocument reread = parse_document(text);
    const FiniteLattice l2 = lattice_from_document(*reread.lattice);
    CHECK(l2.size() == l.size());
    for (ElemId x = 0; x < l.size(); ++x)
        for (ElemId y = 0; y < l.size(); ++y) CHECK(l.leq(x, y) == l2.leq(x, y));
}

TEST_CASE("model documents") {
    const ParsedDocument parsed = parse_document(R"(
model
preset: icosahedron
epsilon: 0.25
d_resolution: 11
direction: 0 0 1
)");
    REQUIRE(parsed.kind == DocumentKind::model);
    CHECK(*parsed.model->preset == "icosahedron");
    CHECK(*parsed.model->epsilon == doctest::Approx(0.25));
    CHECK(*parsed.model->d_resolution == 11);
    REQUIRE(parsed.model->directions.size() == 1);
}

TEST_CASE("constructed subsystems write out and reparse") {
    const FiniteSps s = FiniteSps::from_family(letter_names(4), {0, 1, 2, 4, 8, 15});
    const FiniteSps sub = t_classical_system(s);
    const FiniteSps reread = sps_from_document(*parse_document(write_sps_document(sub, nullptr, {})).sps);
    CHECK(find_isomorphism(sub, reread).has_value());

    const FiniteSps base = discrete_sps(2);
    const FiniteSps classical_part = classical_subsystem(base, complement_ortho(base));
    const FiniteSps reread2 =
        sps_from_document(*parse_document(write_sps_document(classical_part, nullptr, {})).sps);
    CHECK(find_isomorphism(classical_part, reread2).has_value());
}

TEST_CASE("property literals use sorted state names") {
    const FiniteSps s = sierpinski_sps();
    CHECK(property_literal(s, s.bottom_property()) == "[]");
    CHECK(property_literal(s, s.top_property()) == "[p q]");
}

TEST_CASE("the parser fails cleanly on mangled input") {
    const std::string seedling = write_sps_document(mo_sps(2), nullptr, {});
    CounterRng rng(0xF00D, 0);
    for (int i = 0; i < 200; ++i) {
        std::string text = seedling;
        // flip a few characters anywhere in the document
        const std::size_t edits = 1 + rng.next_below(4);
        for (std::size_t k = 0; k < edits; ++k)
            text[rng.next_below(text.size())] =
                static_cast<char>(32 + rng.next_below(95));
        try {
            const ParsedDocument doc = parse_document(text);
            if (doc.kind == DocumentKind::sps) sps_from_document(*doc.sps);
        } catch (const Error& e) {
            const bool expected = e.code() == Errc::parse_error ||
                                  e.code() == Errc::invalid_document ||
                                  e.code() == Errc::not_a_lattice;
            CHECK(expected);
        }
    }
    // pure noise
    for (int i = 0; i < 100; ++i) {
        std::string noise;
        const std::size_t length = rng.next_below(120);
        for (std::size_t k = 0; k < length; ++k)
            noise += static_cast<char>(32 + rng.next_below(95));
        CHECK_THROWS_AS(parse_document(noise), Error);
    }
}
