#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdawg/text.hpp"

namespace cdawg {

// One node per two-sided-maximal substring, identified by that string.
struct NodeRecord {
    int id = 0;
    std::string long_label; // the node's maximal substring; "" at the source of non-unary texts
    int length = 0;
    bool is_source = false; // carries the class of the empty string
    bool is_sink = false;   // long_label equals the whole text
};

// Edge label stored as a span [label_begin..label_end] (1-based, inclusive)
// into the owning graph's text; resolve with Cdawg::label().
struct EdgeRecord {
    int from = 0;
    int label_begin = 0;
    int label_end = 0;
    int to = 0;
};

struct Cdawg {
    Text text;
    std::vector<NodeRecord> nodes; // sorted by (length, bytes); ids equal indices
    std::vector<EdgeRecord> edges; // sorted by (from, label bytes)
    int size_e = 0;                // == edges.size()

    std::string_view label(const EdgeRecord& e) const { return text.slice(e.label_begin, e.label_end); }
    const NodeRecord* find_node(std::string_view long_label) const;
    const NodeRecord& source() const;
    const NodeRecord& sink() const;
    std::vector<int> out_degrees() const;
};

// Same node identities and same labeled transitions, labels compared by content.
bool canonical_equal(const Cdawg& a, const Cdawg& b);

// Walk every path from the source, stopping after each label character (the
// walk starts on the source's own label, which is non-empty for unary texts).
// True iff that spells every distinct non-empty substring of the text exactly
// once.
bool spell_check(const Cdawg& c);

} // namespace cdawg
