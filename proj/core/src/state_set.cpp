// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/state_set.hpp"

#include <algorithm>
#include <string>

namespace spslab {

std::vector<std::size_t> set_members(StateSet s) {
    std::vector<std::size_t> out;
    out.reserve(set_size(s));
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

std::string format_set(const std::vector<std::string>& names, StateSet s) {
    std::vector<std::string> member_names;
    for (std::size_t i : set_members(s)) member_names.push_back(names[i]);
    std::sort(member_names.begin(), member_names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < member_names.size(); ++i) {
        if (i) out += ' ';
        out += member_names[i];
    }
    return out + "}";
}

} // namespace spslab
