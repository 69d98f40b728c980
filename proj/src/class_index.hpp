#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "cdawg/text.hpp"

namespace cdawg::detail {

struct PosVecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// The longest substring of an occurrence-set class, as T[beg .. beg+len-1].
// Unique: same-length members of one class are byte-identical.
struct ClassLongest {
    int len = -1;
    int beg = 1;
};

// Occurrence-set classes of every distinct substring of t, including "".
// by_beg groups by begin-position sets, by_end by end-position sets; each
// class keeps only its longest member. The empty string is seeded with the
// full range {1..n} on both sides, so in a unary text it shares (and loses)
// its class with the single character.
struct ClassIndex {
    std::unordered_map<std::vector<int>, ClassLongest, PosVecHash> by_beg, by_end;

    explicit ClassIndex(const Text& t);
};

} // namespace cdawg::detail
