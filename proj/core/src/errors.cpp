// Copyright (c) 2026 spslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "spslab/errors.hpp"

namespace spslab {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::not_a_partial_order: return "NotAPartialOrder";
        case Errc::not_a_lattice: return "NotALattice";
        case Errc::size_cap_exceeded: return "SizeCapExceeded";
        case Errc::invalid_ortho: return "InvalidOrtho";
        case Errc::unknown_property: return "UnknownProperty";
        case Errc::unknown_state: return "UnknownState";
        case Errc::generator_out_of_ground: return "GeneratorOutOfGround";
        case Errc::not_open: return "NotOpen";
        case Errc::not_topological: return "NotTopological";
        case Errc::empty_sample: return "EmptySample";
        case Errc::degenerate_sample: return "DegenerateSample";
        case Errc::invalid_test_spec: return "InvalidTestSpec";
        case Errc::partition_failure: return "PartitionFailure";
        case Errc::incompatible_structure: return "IncompatibleStructure";
        case Errc::parse_error: return "ParseError";
        case Errc::invalid_document: return "InvalidDocument";
    }
    return "UnknownError";
}

} // namespace spslab
