#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdawg/text.hpp"

namespace cdawg {

// Sorted 1-based positions.
using PositionSet = std::vector<int>;

// Start positions of u's occurrences in t. The empty string occupies {1..n};
// there is no 0 or n+1 padding position. Absent u yields the empty set.
PositionSet begin_positions(std::string_view u, const Text& t);

// End positions of u's occurrences; {1..n} for the empty string.
PositionSet end_positions(std::string_view u, const Text& t);

// Longest string whose end-position set equals end_positions(x): x extended
// leftwards while every occurrence is preceded by one and the same character.
// Throws std::invalid_argument when x does not occur in t.
std::string left_class_longest(std::string_view x, const Text& t);

// Mirror image: longest string with begin_positions(w) == begin_positions(x).
std::string right_class_longest(std::string_view x, const Text& t);

// Distinct characters c with x·c a substring of t, sorted. For x == "" this
// is the whole alphabet of t. Empty when x does not occur.
std::string extension_chars(std::string_view x, const Text& t);

} // namespace cdawg
