#pragma once

#include <string>
#include <vector>

#include "cdawg/edits.hpp"

namespace cdawg {

// A falsified instance of one checked property.
struct LemmaViolation {
    std::string lemma_id;
    std::string text; // the original string
    EditOp op;
    std::string witness; // instantiated quantifier, when applicable
    std::string detail;  // the failed consequent, spelled out
};

// Quantifier handling for check L2, whose consequent does not mention the
// witness: report once when any witness exists, or once per witness.
enum class L2Mode { existential, per_witness };

// Check ids, their edit kind, and what they assert (prepending character c,
// deleting the first character a, or substituting it with b; S is the text
// after deletion):
//   L1  ins  a new node cx must extend a node x of the old graph, and its
//            out-degree must not exceed x's
//   L2  ins  binary alphabet: if prepending creates node "c" plus some other
//            new node cx with x an old internal node, deg(c) < old deg("")
//   L3  ins  alphabet size >= 3: if prepending creates node "c", deg(c) < old deg("")
//   L4  ins  surviving nodes gain at most one out-edge, and at most one node gains
//   L5  ins  two distinct characters in the text: if cx is a new node, x
//            keeps its extension-character count
//   L6  del  a node lost by deleting must be a prefix of S whose extension a·x
//            was a node before, with equal extension-character counts
//   L7  sub  an internal node x lost from aS but maximal in both S and bS
//            cannot reappear extended: bx is not a node of bS
//   L8  sub  a string bax absent as a node everywhere before stays absent in bS
//   new_nodes         ins  when e(T) >= 3, F <= e(T) - 1
//   new_nodes_sub     sub  when e(T) >= 3, F <= e(T) - 1
//   new_branches_sub  sub  G <= 1
const std::vector<std::string>& lemma_ids();
EditKind lemma_edit_kind(const std::string& id); // throws on unknown id

// Evaluate one lemma on one edit; empty result means no violated instance.
// Throws when the id is unknown or the op kind does not match the lemma.
// base: prebuilt graph of the deletion image S (substitution lemmas only);
// built on demand when null.
std::vector<LemmaViolation> check_lemma(const std::string& id, const EditPair& pair,
                                        const Cdawg* base = nullptr, L2Mode l2 = L2Mode::existential);
std::vector<LemmaViolation> check_lemma(const std::string& id, const Text& t, const EditOp& op,
                                        BuildMode mode = BuildMode::fast, L2Mode l2 = L2Mode::existential);

} // namespace cdawg
