#include "cdawg/edits.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace cdawg {

const char* edit_kind_name(EditKind k) {
    switch (k) {
    case EditKind::insert: return "ins";
    case EditKind::remove: return "del";
    case EditKind::substitute: return "sub";
    }
    return "?";
}

EditKind parse_edit_kind(std::string_view s) {
    if (s == "ins" || s == "insert") return EditKind::insert;
    if (s == "del" || s == "delete") return EditKind::remove;
    if (s == "sub" || s == "substitute") return EditKind::substitute;
    throw std::invalid_argument("unknown edit kind: " + std::string(s));
}

std::string edit_op_name(const EditOp& op) {
    std::string out = edit_kind_name(op.kind);
    if (op.kind != EditKind::remove) {
        out.push_back(' ');
        out.push_back(op.ch);
    }
    return out;
}

Text apply_left_edit(const Text& t, const EditOp& op) {
    switch (op.kind) {
    case EditKind::insert:
        return Text(op.ch + t.bytes);
    case EditKind::remove:
        if (t.empty()) throw std::invalid_argument("delete on empty text");
        return Text(t.bytes.substr(1));
    case EditKind::substitute:
        if (t.empty()) throw std::invalid_argument("substitute on empty text");
        if (static_cast<unsigned char>(op.ch) == t.at(1))
            throw std::invalid_argument("substitute with the character already in place");
        return Text(op.ch + t.bytes.substr(1));
    }
    throw std::invalid_argument("unknown edit kind");
}

SizeBound size_bound(const Text& t, const EditOp& op, int e_before) {
    const int n = static_cast<int>(t.bytes.size());
    switch (op.kind) {
    case EditKind::insert:
        return {n >= 3 && e_before >= 3, e_before - 1};
    case EditKind::remove:
        return {t.sigma() >= 2, e_before - 2};
    case EditKind::substitute:
        return {n >= 4 && e_before >= 3, e_before};
    }
    throw std::invalid_argument("unknown edit kind");
}

DeltaReport delta_from_graphs(const Cdawg& before, const Cdawg& after, const EditOp& op) {
    DeltaReport r;
    r.original = before.text;
    r.edited = after.text;
    r.op = op;
    r.e_before = before.size_e;
    r.e_after = after.size_e;
    r.delta = r.e_after - r.e_before;

    std::unordered_map<std::string_view, int> deg_before;
    auto degs_b = before.out_degrees();
    for (const auto& n : before.nodes) deg_before.emplace(n.long_label, degs_b[static_cast<size_t>(n.id)]);

    auto degs_a = after.out_degrees();
    for (const auto& n : after.nodes) {
        const int da = degs_a[static_cast<size_t>(n.id)];
        auto it = deg_before.find(n.long_label);
        if (it == deg_before.end()) {
            r.F += da;
            r.new_nodes.push_back(n.long_label);
        } else if (da > it->second) {
            r.G += da - it->second;
            r.degree_increased_nodes.push_back(n.long_label);
        }
    }
    // after.nodes is already in (length, bytes) order, so both lists are too
    return r;
}

DeltaReport delta(const Text& t, const EditOp& op, BuildMode mode) {
    EditPair p = make_edit_pair(t, op, mode);
    return delta_from_graphs(p.before, p.after, op);
}

EditPair make_edit_pair(const Text& t, const EditOp& op, BuildMode mode) {
    EditPair p;
    p.original = t;
    p.op = op;
    p.edited = apply_left_edit(t, op);
    p.before = build(t, mode);
    p.after = build(p.edited, mode);
    return p;
}

} // namespace cdawg
