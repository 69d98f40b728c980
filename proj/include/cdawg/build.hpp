#pragma once

#include "cdawg/graph.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

enum class BuildMode {
    fast,    // suffix-automaton route
    naive,   // occurrence-set definitions, quadratic
    checked, // build both, throw unless canonically equal
};

// Reference construction straight from the occurrence-set classes; O(n^2).
Cdawg build_naive(const Text& t);

// Suffix-automaton-based construction; O(n log sigma).
Cdawg build_fast(const Text& t);

Cdawg build(const Text& t, BuildMode mode = BuildMode::fast);

} // namespace cdawg
