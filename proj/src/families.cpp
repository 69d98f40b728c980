#include "cdawg/families.hpp"

#include <stdexcept>

#include <json.hpp>

#include "cdawg/build.hpp"

namespace cdawg {

namespace {

std::string repeated(const std::string& unit, int count) {
    std::string out;
    out.reserve(unit.size() * static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) out += unit;
    return out;
}

void validate(const FamilySpec& spec) {
    if (spec.m < 1) throw std::invalid_argument("family: m must be positive");
    if (spec.kind == FamilyKind::online && (spec.k < 0 || spec.k > spec.m))
        throw std::invalid_argument("family: online needs 0 <= k <= m");
}

} // namespace

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::insertion: return "insertion";
    case FamilyKind::deletion: return "deletion";
    case FamilyKind::substitution: return "substitution";
    case FamilyKind::online: return "online";
    }
    throw std::logic_error("family_kind_name: bad kind");
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "insertion" || name == "ins") return FamilyKind::insertion;
    if (name == "deletion" || name == "del") return FamilyKind::deletion;
    if (name == "substitution" || name == "sub") return FamilyKind::substitution;
    if (name == "online") return FamilyKind::online;
    throw std::invalid_argument("unknown family kind: " + name);
}

Text family_string(const FamilySpec& spec) {
    validate(spec);
    const int m = spec.m;
    switch (spec.kind) {
    case FamilyKind::insertion:
        return Text{repeated("ab", m) + "c" + repeated("ab", m + 1)};
    case FamilyKind::deletion:
    case FamilyKind::substitution:
        return Text{repeated("ab", m + 1) + "c" + repeated("ab", m)};
    case FamilyKind::online:
        return Text{repeated("ab", m + spec.k) + "c" + "ab" + repeated("ab", 2 * m) + "$"};
    }
    throw std::logic_error("family_string: bad kind");
}

EditOp family_edit(const FamilySpec& spec) {
    validate(spec);
    switch (spec.kind) {
    case FamilyKind::insertion:
    case FamilyKind::online: return {EditKind::insert, 'b'};
    case FamilyKind::deletion: return {EditKind::remove, '\0'};
    case FamilyKind::substitution: return {EditKind::substitute, 'b'};
    }
    throw std::logic_error("family_edit: bad kind");
}

std::pair<int, int> predicted_sizes(const FamilySpec& spec) {
    validate(spec);
    const int m = spec.m;
    const int k = spec.k;
    switch (spec.kind) {
    case FamilyKind::insertion: return {2 * m + 3, 4 * m + 4};
    case FamilyKind::deletion: return {2 * m + 3, 4 * m + 2};
    case FamilyKind::substitution: return {2 * m + 3, 4 * m + 3};
    case FamilyKind::online:
        return {5 * m + k + 4, k < m ? 8 * m + 4 * k + 7 : 12 * m + 6};
    }
    throw std::logic_error("predicted_sizes: bad kind");
}

FamilyRow verify_family(const FamilySpec& spec) {
    FamilyRow row;
    row.spec = spec;
    const Text t = family_string(spec);
    const Text edited = apply_left_edit(t, family_edit(spec));
    row.length = static_cast<int>(t.bytes.size());
    row.e_before = build_fast(t).size_e;
    row.e_after = build_fast(edited).size_e;
    row.delta = row.e_after - row.e_before;
    auto [pb, pa] = predicted_sizes(spec);
    row.predicted_before = pb;
    row.predicted_after = pa;
    int required_delta = pa - pb;
    switch (spec.kind) { // the theorems state the delta in terms of e(T)
    case FamilyKind::insertion: required_delta = row.e_before - 2; break;
    case FamilyKind::deletion: required_delta = row.e_before - 4; break;
    case FamilyKind::substitution: required_delta = row.e_before - 3; break;
    case FamilyKind::online: break;
    }
    row.match = row.e_before == pb && row.e_after == pa && row.delta == required_delta;
    return row;
}

std::string family_table_tsv(const std::vector<FamilyRow>& rows) {
    std::string out = "kind\tm\tk\tlength\te_before\te_after\tdelta\tpredicted\tmatch\n";
    for (const auto& r : rows) {
        out += family_kind_name(r.spec.kind);
        out += '\t' + std::to_string(r.spec.m) + '\t';
        out += r.spec.kind == FamilyKind::online ? std::to_string(r.spec.k) : std::string("-");
        out += '\t' + std::to_string(r.length) + '\t' + std::to_string(r.e_before) + '\t' +
               std::to_string(r.e_after) + '\t' + std::to_string(r.delta) + '\t' +
               std::to_string(r.predicted_before) + "->" + std::to_string(r.predicted_after) +
               '\t' + (r.match ? "yes" : "NO") + '\n';
    }
    return out;
}

std::string family_table_json(const std::vector<FamilyRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json rec;
        rec["kind"] = family_kind_name(r.spec.kind);
        rec["m"] = r.spec.m;
        if (r.spec.kind == FamilyKind::online)
            rec["k"] = r.spec.k;
        else
            rec["k"] = nullptr;
        rec["length"] = r.length;
        rec["e_before"] = r.e_before;
        rec["e_after"] = r.e_after;
        rec["delta"] = r.delta;
        rec["predicted_before"] = r.predicted_before;
        rec["predicted_after"] = r.predicted_after;
        rec["match"] = r.match;
        arr.push_back(rec);
    }
    return arr.dump(2) + "\n";
}

} // namespace cdawg
