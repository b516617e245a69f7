// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace spslab {

/// Domain error categories. Verdict-carrying operations (axiom verification,
/// theorem checkers) report failures in their return value instead of throwing.
enum class Errc {
    not_a_partial_order,
    not_a_lattice,
    size_cap_exceeded,
    invalid_ortho,
    unknown_property,
    unknown_state,
    generator_out_of_ground,
    not_open,
    not_topological,
    empty_sample,
    degenerate_sample,
    invalid_test_spec,
    partition_failure,
    incompatible_structure,
    parse_error,
    invalid_document,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Error(Errc code, std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(std::string(errc_name(code)) + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + message),
          code_(code), line_(line), column_(column) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<std::size_t> column() const noexcept { return column_; }

private:
    Errc code_;
    std::optional<std::size_t> line_;
    std::optional<std::size_t> column_;
};

} // namespace spslab
