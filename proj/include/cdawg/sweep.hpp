#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdawg/edits.hpp"
#include "cdawg/lemmas.hpp"

namespace cdawg {

// Exhaustive verification over every string of length <= max_len drawn from
// alphabet, under every applicable edit. checks may contain lemma ids plus:
//   bound  per-edit size bound, each applied under its stated preconditions
//          (insert: n >= 3 and e >= 3, delta <= e-1; delete: at least two
//          distinct characters, delta <= e-2; substitute: n >= 4 and e >= 3,
//          delta <= e); pairs outside the preconditions are tracked separately
//   fg     delta <= F + G on every pair, and the G table: G <= 1 for insert
//          and substitute, G == 0 for delete
//   all    everything above
struct SweepOptions {
    std::string alphabet;
    int max_len = 0;
    std::vector<EditKind> ops = {EditKind::insert, EditKind::remove, EditKind::substitute};
    std::vector<std::string> checks = {"all"};
    int jobs = 1;
    bool verify_with_naive = false; // canonical_equal(naive, fast) on every graph built
    bool spell = false;             // spell_check on every graph built
    L2Mode l2 = L2Mode::existential;
};

struct SweepViolation {
    std::string check_id;
    std::string text;
    EditOp op;
    std::string witness;
    std::string detail;
    std::string repro; // command line reproducing the pair
};

// Extremes over one edit kind; the bound's precondition splits the pairs.
struct OpStats {
    long pairs = 0;
    long bounded_pairs = 0;
    int max_delta = INT_MIN;
    std::string max_text;
    EditOp max_op{};
    int out_max_delta = INT_MIN;
    std::string out_max_text;
    EditOp out_max_op{};
};

struct SweepReport {
    std::string alphabet;
    int max_len = 0;
    std::vector<EditKind> ops;
    std::vector<std::string> checks;
    long strings = 0;
    long pairs = 0;
    std::map<EditKind, OpStats> per_op;
    std::vector<SweepViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_json() const; // canonical
    std::string to_text() const; // short human-readable summary
};

SweepReport sweep(const SweepOptions& opt);

} // namespace cdawg
