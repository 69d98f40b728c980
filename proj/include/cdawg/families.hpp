#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdawg/edits.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

// Witness families over {a,b,c,$} ('$' is an ordinary byte) realizing the
// worst-case size jumps:
//   insertion     T = (ab)^m c (ab)^{m+1},   prepend b:      2m+3 -> 4m+4
//   deletion      T = (ab)^{m+1} c (ab)^m,   drop first a:   2m+3 -> 4m+2
//   substitution  T = (ab)^{m+1} c (ab)^m,   first a -> b:   2m+3 -> 4m+3
//   online        T = (ab)^{m+k} c ab (ab)^{2m} $, prepend b: 5m+k+4 -> 8m+4k+7
// The online prepended form holds for 0 <= k <= m-1 (the range the leftward
// construction walks through); at k = m the prepend leaves that walk and the
// exact size is 12m+6, one below the extrapolated formula.
enum class FamilyKind { insertion, deletion, substitution, online };

const char* family_kind_name(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& name); // throws on unknown

struct FamilySpec {
    FamilyKind kind = FamilyKind::insertion;
    int m = 1;
    int k = 0; // online only, 0 <= k <= m
};

Text family_string(const FamilySpec& spec); // throws on out-of-range m/k
EditOp family_edit(const FamilySpec& spec); // the edit realizing the jump
std::pair<int, int> predicted_sizes(const FamilySpec& spec); // (e(T), e(T'))

struct FamilyRow {
    FamilySpec spec;
    int length = 0; // |T|
    int e_before = 0;
    int e_after = 0;
    int delta = 0;
    int predicted_before = 0;
    int predicted_after = 0;
    bool match = false; // sizes equal predictions and delta hits e-2 / e-4 / e-3
};

FamilyRow verify_family(const FamilySpec& spec);

std::string family_table_tsv(const std::vector<FamilyRow>& rows);
std::string family_table_json(const std::vector<FamilyRow>& rows);

} // namespace cdawg
