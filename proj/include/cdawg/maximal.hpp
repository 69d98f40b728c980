#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdawg/positions.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

// One two-sided-maximal substring, annotated with where it ends and how it
// extends to the right.
struct MaximalEntry {
    std::string str;
    PositionSet end_positions;
    std::string right_extensions; // sorted distinct follower characters
};

// All substrings maximal on both sides, sorted by (length, bytes).
struct MaximalSet {
    std::vector<MaximalEntry> members;

    const MaximalEntry* find(std::string_view s) const;
    bool contains(std::string_view s) const { return find(s) != nullptr; }
    std::vector<std::string> strings() const;
};

// Computes the maximal set by grouping every distinct substring (including
// "") into end-position and begin-position classes and intersecting the
// longest members of both groupings. Always contains t itself; contains ""
// exactly when t has at least two distinct characters.
MaximalSet maximal_set(const Text& t);

// Members occurring at least twice, excluding "" and t itself. Always equals
// maximal_set(t) minus those two.
std::vector<std::string> maximal_repeats(const Text& t);

// right_extensions count of a member; throws when x is not in the maximal set.
int out_degree(std::string_view x, const Text& t);

} // namespace cdawg
