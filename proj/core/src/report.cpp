// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/report.hpp"

namespace spslab {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

std::string Report::to_text() const {
    std::string out = "spslab report\n";
    out += "command: " + command_ + "\n";
    out += "input-digest: fnv1a64:" + digest_ + "\n";
    if (seed_) out += "seed: " + std::to_string(*seed_) + "\n";
    for (const auto& [name, lines] : sections_) {
        out += "[section " + name + "]\n";
        for (const std::string& line : lines) out += line + "\n";
    }
    out += "[end report]\n";
    return out;
}

} // namespace spslab
