// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace spslab {

/// A subset of a ground set of states, as a bit mask. Ground sets are capped
/// at 64 states; saturation families on larger carriers would be intractable
/// long before the mask width becomes the bottleneck.
using StateSet = std::uint64_t;

inline constexpr std::size_t kMaxStates = 64;

constexpr StateSet state_bit(std::size_t i) { return StateSet{1} << i; }

constexpr StateSet full_set(std::size_t n) {
    return n >= 64 ? ~StateSet{0} : (StateSet{1} << n) - 1;
}

constexpr bool contains_state(StateSet s, std::size_t i) { return (s >> i) & 1; }

constexpr bool subset_of(StateSet a, StateSet b) { return (a & ~b) == 0; }

constexpr std::size_t set_size(StateSet s) { return static_cast<std::size_t>(std::popcount(s)); }

/// States of `s` as ascending indices.
std::vector<std::size_t> set_members(StateSet s);

/// Canonical text form of a state set: member names, sorted, in braces.
std::string format_set(const std::vector<std::string>& names, StateSet s);

} // namespace spslab
