// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spslab/sps.hpp"

namespace spslab {

// One human-readable structured text format for all inputs. Lines hold a
// keyword followed by values; '#' starts a comment; property literals are
// bracketed state-name lists like "[p q]". The first keyword names the
// document kind: "sps", "lattice" or "model".

struct SpsDocument {
    std::vector<std::string> states;
    std::vector<StateSet> closed_sets;
    std::vector<std::pair<StateSet, StateSet>> ortho_pairs;
    std::vector<std::pair<StateSet, StateSet>> test_pairs;
};

struct LatticeDocument {
    std::vector<std::string> elements;
    std::vector<std::pair<ElemId, ElemId>> covers;  // (lower, upper)
};

struct ModelDocument {
    std::optional<std::string> preset;  // "icosahedron" or "fibonacci-N"
    std::vector<std::array<double, 3>> points;
    std::vector<std::array<double, 3>> directions;
    std::optional<double> epsilon;
    std::optional<int> d_resolution;
};

enum class DocumentKind { sps, lattice, model };

struct ParsedDocument {
    DocumentKind kind;
    std::optional<SpsDocument> sps;
    std::optional<LatticeDocument> lattice;
    std::optional<ModelDocument> model;
};

/// Throws Error{parse_error} with line and column on malformed input.
ParsedDocument parse_document(std::string_view text);

/// State Property System of a document (properties are the closed sets under
/// inclusion; axiom violations are left for verify_axioms).
FiniteSps sps_from_document(const SpsDocument& doc);

/// The document's complement pairs as a total map, or nullopt when the
/// document has none. Throws Error{invalid_ortho} when the pairs conflict or
/// leave a property uncovered, Error{unknown_property} when a pair names a
/// set outside the family.
std::optional<OrthoMap> ortho_from_document(const FiniteSps& s, const SpsDocument& doc);

std::vector<TestPair> tests_from_document(const FiniteSps& s, const SpsDocument& doc);

FiniteLattice lattice_from_document(const LatticeDocument& doc);

std::string write_sps_document(const FiniteSps& s, const OrthoMap* ortho,
                               std::span<const TestPair> tests);

std::string write_lattice_document(const FiniteLattice& lattice);

/// Bracketed canonical property literal, e.g. "[p q]".
std::string property_literal(const FiniteSps& s, ElemId a);

} // namespace spslab
