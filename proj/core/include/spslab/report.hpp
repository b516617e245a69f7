// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spslab {

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

/// Deterministic plain-text report with machine-readable section markers.
/// Identical inputs (and seed, when stochastic) produce byte-identical text.
class Report {
public:
    Report(std::string command, std::string input_digest)
        : command_(std::move(command)), digest_(std::move(input_digest)) {}

    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void open_section(std::string name) { sections_.emplace_back(std::move(name), Lines{}); }
    void line(std::string text) { sections_.back().second.push_back(std::move(text)); }
    void kv(std::string_view key, std::string_view value) {
        line(std::string(key) + ": " + std::string(value));
    }

    std::string to_text() const;

private:
    using Lines = std::vector<std::string>;
    std::string command_;
    std::string digest_;
    std::optional<std::uint64_t> seed_;
    std::vector<std::pair<std::string, Lines>> sections_;
};

} // namespace spslab
