// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace spslab {

/// Counter-based splittable generator in the splitmix64 family. Every output
/// is a pure function of (seed, stream, counter), so trials can be drawn in
/// any order or from any thread and still reproduce bit-exactly.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed + 0x9E3779B97F4A7C15ull * (stream + 1))) {}

    /// Word `counter` of this stream.
    std::uint64_t at(std::uint64_t counter) const {
        return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ull);
    }

    /// Uniform double in [0, 1) from word `counter`.
    double uniform_at(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }

    /// Independent child stream.
    CounterRng split(std::uint64_t stream) const { return CounterRng(key_, stream + 1); }

    // Stateful convenience for test-data generation.
    std::uint64_t next() { return at(cursor_++); }
    double uniform() { return uniform_at(cursor_++); }
    /// Uniform integer in [0, bound); bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t cursor_ = 0;
};

} // namespace spslab
