// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/document.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

namespace spslab {

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t column;
};

using TokenLine = std::vector<Token>;

[[noreturn]] void fail(const Token& at, const std::string& message) {
    throw Error(Errc::parse_error, message, at.line, at.column);
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw Error(Errc::parse_error, message, line, 1);
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           c == '+' || c == '*';
}

std::vector<TokenLine> tokenize(std::string_view text) {
    std::vector<TokenLine> lines;
    TokenLine current;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    auto flush_line = [&]() {
        if (!current.empty()) lines.push_back(std::move(current));
        current = {};
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            flush_line();
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++column;
            continue;
        }
        if (c == '[' || c == ']') {
            current.push_back({std::string(1, c), line, column});
            ++i;
            ++column;
            continue;
        }
        const std::size_t start = i, start_col = column;
        while (i < text.size() && (name_char(text[i]) || text[i] == ':')) {
            ++i;
            ++column;
        }
        if (i == start) {
            throw Error(Errc::parse_error, std::string("unexpected character '") + c + "'", line,
                        column);
        }
        current.push_back({std::string(text.substr(start, i - start)), line, start_col});
    }
    flush_line();
    return lines;
}

struct SetResolver {
    const std::vector<std::string>& states;
    std::unordered_map<std::string, std::size_t> index;

    explicit SetResolver(const std::vector<std::string>& names) : states(names) {
        for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
    }

    StateSet names_to_mask(std::span<const Token> tokens) const {
        StateSet mask = 0;
        for (const Token& t : tokens) {
            auto it = index.find(t.text);
            if (it == index.end()) fail(t, "unknown state name '" + t.text + "'");
            mask |= state_bit(it->second);
        }
        return mask;
    }

    /// Consumes one "[ name* ]" literal starting at tokens[pos].
    StateSet literal(const TokenLine& tokens, std::size_t& pos) const {
        if (pos >= tokens.size() || tokens[pos].text != "[")
            fail(tokens[std::min(pos, tokens.size() - 1)],
                 "expected '[' to open a property literal");
        const std::size_t open = pos++;
        std::vector<Token> members;
        while (pos < tokens.size() && tokens[pos].text != "]") members.push_back(tokens[pos++]);
        if (pos >= tokens.size()) fail(tokens[open], "unterminated property literal");
        ++pos;  // consume ']'
        return names_to_mask(members);
    }
};

double parse_double(const Token& t) {
    try {
        std::size_t used = 0;
        const double v = std::stod(t.text, &used);
        if (used != t.text.size()) fail(t, "malformed number '" + t.text + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(t, "malformed number '" + t.text + "'");
    }
}

int parse_int(const Token& t) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
        fail(t, "malformed integer '" + t.text + "'");
    return v;
}

} // namespace

ParsedDocument parse_document(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw Error(Errc::parse_error, "empty document", 1, 1);

    const Token& kind_token = lines.front().front();
    if (lines.front().size() != 1)
        fail(kind_token, "document kind line must hold a single keyword");

    ParsedDocument doc{};
    if (kind_token.text == "sps") {
        doc.kind = DocumentKind::sps;
        doc.sps.emplace();
    } else if (kind_token.text == "lattice") {
        doc.kind = DocumentKind::lattice;
        doc.lattice.emplace();
    } else if (kind_token.text == "model") {
        doc.kind = DocumentKind::model;
        doc.model.emplace();
    } else {
        fail(kind_token, "unknown document kind '" + kind_token.text + "'");
    }

    std::optional<SetResolver> resolver;
    std::unordered_map<std::string, ElemId> element_index;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const TokenLine& tokens = lines[li];
        const Token& key = tokens.front();
        if (key.text.empty() || key.text.back() != ':')
            fail(key, "expected a 'keyword:' line");
        const std::string keyword = key.text.substr(0, key.text.size() - 1);
        const std::span<const Token> rest(tokens.data() + 1, tokens.size() - 1);

        if (doc.kind == DocumentKind::sps) {
            SpsDocument& sps = *doc.sps;
            if (keyword == "states") {
                if (!sps.states.empty()) fail(key, "duplicate states line");
                if (rest.empty()) fail(key, "states line needs at least one name");
                for (const Token& t : rest) {
                    if (t.text == "[" || t.text == "]") fail(t, "brackets are not state names");
                    if (std::find(sps.states.begin(), sps.states.end(), t.text) !=
                        sps.states.end())
                        fail(t, "duplicate state name '" + t.text + "'");
                    sps.states.push_back(t.text);
                }
                resolver.emplace(sps.states);
            } else if (keyword == "set") {
                if (!resolver) fail(key, "states must be declared before sets");
                const StateSet mask = resolver->names_to_mask(rest);
                if (std::find(sps.closed_sets.begin(), sps.closed_sets.end(), mask) !=
                    sps.closed_sets.end())
                    fail(key, "duplicate closed set");
                sps.closed_sets.push_back(mask);
            } else if (keyword == "ortho" || keyword == "test") {
                if (!resolver) fail(key, "states must be declared before pairs");
                std::size_t pos = 1;
                const StateSet first = resolver->literal(tokens, pos);
                const StateSet second = resolver->literal(tokens, pos);
                if (pos != tokens.size()) fail(tokens[pos], "trailing tokens after pair");
                (keyword == "ortho" ? sps.ortho_pairs : sps.test_pairs)
                    .emplace_back(first, second);
            } else {
                fail(key, "unknown keyword '" + keyword + "' in sps document");
            }
        } else if (doc.kind == DocumentKind::lattice) {
            LatticeDocument& lattice = *doc.lattice;
            if (keyword == "elements") {
                if (!lattice.elements.empty()) fail(key, "duplicate elements line");
                if (rest.empty()) fail(key, "elements line needs at least one name");
                for (const Token& t : rest) {
                    if (element_index.count(t.text)) fail(t, "duplicate element '" + t.text + "'");
                    element_index.emplace(t.text, static_cast<ElemId>(lattice.elements.size()));
                    lattice.elements.push_back(t.text);
                }
            } else if (keyword == "cover") {
                if (rest.size() != 2) fail(key, "cover line needs exactly two element names");
                auto lo = element_index.find(rest[0].text);
                auto hi = element_index.find(rest[1].text);
                if (lo == element_index.end()) fail(rest[0], "unknown element '" + rest[0].text + "'");
                if (hi == element_index.end()) fail(rest[1], "unknown element '" + rest[1].text + "'");
                lattice.covers.emplace_back(lo->second, hi->second);
            } else {
                fail(key, "unknown keyword '" + keyword + "' in lattice document");
            }
        } else {
            ModelDocument& model = *doc.model;
            if (keyword == "preset") {
                if (rest.size() != 1) fail(key, "preset line needs one name");
                model.preset = rest[0].text;
            } else if (keyword == "point" || keyword == "direction") {
                if (rest.size() != 3) fail(key, keyword + " line needs three coordinates");
                std::array<double, 3> v{parse_double(rest[0]), parse_double(rest[1]),
                                        parse_double(rest[2])};
                (keyword == "point" ? model.points : model.directions).push_back(v);
            } else if (keyword == "epsilon") {
                if (rest.size() != 1) fail(key, "epsilon line needs one value");
                model.epsilon = parse_double(rest[0]);
            } else if (keyword == "d_resolution") {
                if (rest.size() != 1) fail(key, "d_resolution line needs one value");
                model.d_resolution = parse_int(rest[0]);
            } else {
                fail(key, "unknown keyword '" + keyword + "' in model document");
            }
        }
    }

    if (doc.kind == DocumentKind::sps) {
        if (doc.sps->states.empty()) fail(std::size_t{1}, "sps document is missing a states line");
        if (doc.sps->closed_sets.empty())
            fail(std::size_t{1}, "sps document has no closed sets");
    }
    if (doc.kind == DocumentKind::lattice && doc.lattice->elements.empty())
        fail(std::size_t{1}, "lattice document is missing an elements line");
    return doc;
}

FiniteSps sps_from_document(const SpsDocument& doc) {
    return FiniteSps::from_family(doc.states, doc.closed_sets);
}

std::optional<OrthoMap> ortho_from_document(const FiniteSps& s, const SpsDocument& doc) {
    if (doc.ortho_pairs.empty()) return std::nullopt;
    constexpr ElemId unset = static_cast<ElemId>(-1);
    OrthoMap map;
    map.image.assign(s.property_count(), unset);
    auto put = [&](ElemId a, ElemId b) {
        if (map.image[a] != unset && map.image[a] != b)
            throw Error(Errc::invalid_ortho,
                        "conflicting complements for property " + s.property_name(a));
        map.image[a] = b;
    };
    for (const auto& [first, second] : doc.ortho_pairs) {
        const ElemId a = s.property_of(first);
        const ElemId b = s.property_of(second);
        put(a, b);
        put(b, a);
    }
    for (ElemId a = 0; a < s.property_count(); ++a)
        if (map.image[a] == unset)
            throw Error(Errc::invalid_ortho,
                        "complement pairs do not cover property " + s.property_name(a));
    return map;
}

std::vector<TestPair> tests_from_document(const FiniteSps& s, const SpsDocument& doc) {
    std::vector<TestPair> tests;
    tests.reserve(doc.test_pairs.size());
    for (const auto& [yes, no] : doc.test_pairs)
        tests.push_back({s.property_of(yes), s.property_of(no)});
    return tests;
}

FiniteLattice lattice_from_document(const LatticeDocument& doc) {
    return FiniteLattice::from_covers(doc.elements, doc.covers);
}

std::string property_literal(const FiniteSps& s, ElemId a) {
    std::vector<std::string> names;
    for (std::size_t i : set_members(s.cartan(a))) names.push_back(s.state_name(i));
    std::sort(names.begin(), names.end());
    std::string out = "[";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ' ';
        out += names[i];
    }
    return out + "]";
}

std::string write_sps_document(const FiniteSps& s, const OrthoMap* ortho,
                               std::span<const TestPair> tests) {
    std::string out = "sps\nstates:";
    for (const std::string& name : s.state_names()) out += " " + name;
    out += '\n';
    for (ElemId a = 0; a < s.property_count(); ++a) {
        out += "set:";
        std::vector<std::string> names;
        for (std::size_t i : set_members(s.cartan(a))) names.push_back(s.state_name(i));
        std::sort(names.begin(), names.end());
        for (const std::string& name : names) out += " " + name;
        out += '\n';
    }
    if (ortho) {
        for (ElemId a = 0; a < s.property_count(); ++a)
            if (a <= ortho->image[a])
                out += "ortho: " + property_literal(s, a) + " " +
                       property_literal(s, ortho->image[a]) + "\n";
    }
    for (const TestPair& t : tests)
        out += "test: " + property_literal(s, t.yes) + " " + property_literal(s, t.no) + "\n";
    return out;
}

std::string write_lattice_document(const FiniteLattice& lattice) {
    std::string out = "lattice\nelements:";
    for (const std::string& name : lattice.names()) out += " " + name;
    out += '\n';
    for (ElemId x = 0; x < lattice.size(); ++x)
        for (ElemId y : lattice.upper_covers(x))
            out += "cover: " + lattice.name(x) + " " + lattice.name(y) + "\n";
    return out;
}

} // namespace spslab
