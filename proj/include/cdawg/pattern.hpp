#pragma once

#include <string>

namespace cdawg {

// Expands a compact repeat syntax into a literal string: "(ab)^4c(ab)^3"
// -> "ababababcababab", "a^5" -> "aaaaa". '(' ')' '^' are metacharacters
// (no escapes); every other byte stands for itself. Throws invalid_argument
// on malformed input or an expansion past ~100M bytes.
std::string expand_repeats(const std::string& pattern);

} // namespace cdawg
