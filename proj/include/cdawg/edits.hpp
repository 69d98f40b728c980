#pragma once

#include <string>
#include <vector>

#include "cdawg/build.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

enum class EditKind { insert, remove, substitute };

// A single left-end edit. ch is the character being written (ignored by
// remove). substitute requires ch != T[1]; remove and substitute require a
// non-empty text.
struct EditOp {
    EditKind kind = EditKind::insert;
    char ch = 0;
};

const char* edit_kind_name(EditKind k);     // "ins" / "del" / "sub"
EditKind parse_edit_kind(std::string_view); // throws std::invalid_argument
std::string edit_op_name(const EditOp& op); // e.g. "ins b", "del"

Text apply_left_edit(const Text& t, const EditOp& op); // throws on invalid op

// The proven worst-case size jump for one edit, with the preconditions under
// which it holds: insert needs n >= 3 and e >= 3 (limit e-1); delete needs
// two distinct characters in the text (limit e-2); substitute needs n >= 4
// and e >= 3 (limit e).
struct SizeBound {
    bool applies = false;
    int limit = 0;
};
SizeBound size_bound(const Text& t, const EditOp& op, int e_before);

// How one edit moved the graph size, decomposed over nodes. F sums the
// out-degrees of nodes that exist only after the edit; G sums the per-node
// out-degree increases of surviving nodes. delta <= F + G always.
struct DeltaReport {
    Text original, edited;
    EditOp op;
    int e_before = 0;
    int e_after = 0;
    int delta = 0;
    int F = 0;
    int G = 0;
    std::vector<std::string> new_nodes;              // sorted (length, bytes)
    std::vector<std::string> degree_increased_nodes; // sorted (length, bytes)
};

DeltaReport delta_from_graphs(const Cdawg& before, const Cdawg& after, const EditOp& op);
DeltaReport delta(const Text& t, const EditOp& op, BuildMode mode = BuildMode::fast);

// One edit with both endpoint graphs, shared by the lemma checks and sweeps.
struct EditPair {
    Text original, edited;
    EditOp op;
    Cdawg before, after;
};

EditPair make_edit_pair(const Text& t, const EditOp& op, BuildMode mode = BuildMode::fast);

} // namespace cdawg
