#include "cdawg/lemmas.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cdawg/positions.hpp"

namespace cdawg {

namespace {

struct NodeView {
    std::unordered_set<std::string_view> set;
    std::unordered_map<std::string_view, int> degree;

    explicit NodeView(const Cdawg& g) {
        auto degs = g.out_degrees();
        for (const auto& n : g.nodes) {
            set.insert(n.long_label);
            degree.emplace(n.long_label, degs[static_cast<size_t>(n.id)]);
        }
    }
    bool has(std::string_view s) const { return set.count(s) != 0; }
    int deg(std::string_view s) const { return degree.at(s); }
};

// Extension-character count of an arbitrary substring; agrees with the node
// out-degree whenever x is a node, but stays defined when it is not.
int ext_degree(std::string_view x, const Text& t) { return static_cast<int>(extension_chars(x, t).size()); }

struct Checker {
    const EditPair& p;
    const std::string& id;
    std::vector<LemmaViolation> out;

    void fail(std::string witness, std::string detail) {
        out.push_back({id, p.original.bytes, p.op, std::move(witness), std::move(detail)});
    }
};

void check_l1(Checker& c, const NodeView& before, const NodeView& after) {
    const char ins = c.p.op.ch;
    for (const auto& n : c.p.after.nodes) {
        std::string_view u = n.long_label;
        if (u.empty() || u[0] != ins || before.has(u)) continue;
        std::string_view x = u.substr(1);
        if (!before.has(x)) {
            c.fail(std::string(u), "extension base is not a node of the original graph");
            continue;
        }
        if (after.deg(u) > before.deg(x))
            c.fail(std::string(u), "new node out-degree " + std::to_string(after.deg(u)) +
                                       " exceeds base degree " + std::to_string(before.deg(x)));
    }
}

// shared by L2/L3: prepended character became a node that did not exist before
bool char_became_node(const Checker& c, const NodeView& before, const NodeView& after) {
    std::string cs(1, c.p.op.ch);
    return !before.has(cs) && after.has(cs);
}

void check_l2(Checker& c, const NodeView& before, const NodeView& after, L2Mode mode) {
    if (c.p.original.sigma() != 2) return;
    if (!char_became_node(c, before, after)) return;
    std::vector<std::string> witnesses;
    for (const auto& n : c.p.before.nodes) {
        std::string_view x = n.long_label;
        if (x.empty() || x == std::string_view(c.p.original.bytes)) continue;
        std::string cx = c.p.op.ch + std::string(x);
        if (!before.has(cx) && after.has(cx)) witnesses.push_back(std::move(cx));
    }
    if (witnesses.empty()) return;
    std::string cs(1, c.p.op.ch);
    if (after.deg(cs) < before.deg("")) return;
    std::string detail = "deg(" + cs + ") = " + std::to_string(after.deg(cs)) +
                         " not below old source degree " + std::to_string(before.deg(""));
    if (mode == L2Mode::existential) {
        c.fail(witnesses.front(), detail);
    } else {
        for (auto& w : witnesses) c.fail(std::move(w), detail);
    }
}

void check_l3(Checker& c, const NodeView& before, const NodeView& after) {
    if (c.p.original.sigma() < 3) return;
    if (!char_became_node(c, before, after)) return;
    std::string cs(1, c.p.op.ch);
    if (after.deg(cs) >= before.deg(""))
        c.fail(cs, "deg(" + cs + ") = " + std::to_string(after.deg(cs)) + " not below old source degree " +
                       std::to_string(before.deg("")));
}

void check_l4(Checker& c, const NodeView& before, const NodeView& after) {
    int gained = 0;
    for (const auto& n : c.p.before.nodes) {
        std::string_view y = n.long_label;
        if (!after.has(y)) continue;
        const int d = before.deg(y), da = after.deg(y);
        if (da != d && da != d + 1) {
            c.fail(std::string(y),
                   "surviving degree moved " + std::to_string(d) + " -> " + std::to_string(da));
            continue;
        }
        if (da == d + 1 && ++gained == 2) c.fail(std::string(y), "second node gaining an out-edge");
    }
}

void check_l5(Checker& c, const NodeView& before) {
    // needs two distinct characters in the text: prepending a to a^n makes
    // the sink a new node a^{n+1} whose base a^n does gain an extension
    if (c.p.original.sigma() < 2) return;
    const char ins = c.p.op.ch;
    for (const auto& n : c.p.after.nodes) {
        std::string_view u = n.long_label;
        if (u.empty() || u[0] != ins || before.has(u)) continue;
        std::string_view x = u.substr(1);
        const int d = ext_degree(x, c.p.original), da = ext_degree(x, c.p.edited);
        if (d != da)
            c.fail(std::string(u), "extension base changed extension count " + std::to_string(d) + " -> " +
                                       std::to_string(da));
    }
}

void check_l6(Checker& c, const NodeView& before) {
    const std::string_view s(c.p.edited.bytes);
    const char a = c.p.original.bytes[0];
    for (const auto& n : c.p.after.nodes) {
        std::string_view x = n.long_label;
        if (before.has(x)) continue;
        if (s.substr(0, x.size()) != x) {
            c.fail(std::string(x), "lost node is not a prefix of the shortened text");
            continue;
        }
        std::string ax = a + std::string(x);
        if (!before.has(ax)) {
            c.fail(std::string(x), "its left extension was not a node before the deletion");
            continue;
        }
        const int ds = ext_degree(x, c.p.edited), dax = ext_degree(ax, c.p.original);
        if (ds != dax)
            c.fail(std::string(x), "extension counts differ: " + std::to_string(ds) + " vs " +
                                       std::to_string(dax) + " for its left extension");
    }
}

void check_l7(Checker& c, const NodeView& before, const NodeView& after, const Cdawg& base) {
    const char b = c.p.op.ch;
    for (const auto& n : base.nodes) {
        std::string_view x = n.long_label;
        if (x == std::string_view(base.text.bytes)) continue;
        if (before.has(x) || !after.has(x)) continue;
        std::string bx = b + std::string(x);
        if (after.has(bx))
            c.fail(std::string(x), "both x and " + bx + " are nodes after the substitution");
    }
}

void check_l8(Checker& c, const NodeView& before, const NodeView& after, const Cdawg& base) {
    const char a = c.p.original.bytes[0];
    const char b = c.p.op.ch;
    NodeView mid(base);
    for (const auto& n : base.nodes) {
        std::string_view x = n.long_label;
        std::string ax = a + std::string(x);
        std::string bax = b + ax;
        if (!before.has(ax) || before.has(x) || before.has(bax) || mid.has(bax)) continue;
        if (after.has(bax)) c.fail(std::string(x), bax + " became a node of the substituted text");
    }
}

void check_bound_f(Checker& c) {
    const int e = c.p.before.size_e;
    if (e < 3) return;
    DeltaReport r = delta_from_graphs(c.p.before, c.p.after, c.p.op);
    if (r.F > e - 1)
        c.fail("", "new-node degree total " + std::to_string(r.F) + " exceeds e-1 = " + std::to_string(e - 1));
}

void check_bound_g_sub(Checker& c) {
    DeltaReport r = delta_from_graphs(c.p.before, c.p.after, c.p.op);
    if (r.G > 1) c.fail("", "surviving-degree increase total " + std::to_string(r.G) + " exceeds 1");
}

} // namespace

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {"L1", "L2", "L3", "L4", "L5", "L6",
                                                 "L7", "L8", "new_nodes", "new_nodes_sub", "new_branches_sub"};
    return ids;
}

EditKind lemma_edit_kind(const std::string& id) {
    if (id == "L1" || id == "L2" || id == "L3" || id == "L4" || id == "L5" || id == "new_nodes")
        return EditKind::insert;
    if (id == "L6") return EditKind::remove;
    if (id == "L7" || id == "L8" || id == "new_nodes_sub" || id == "new_branches_sub")
        return EditKind::substitute;
    throw std::invalid_argument("unknown lemma id: " + id);
}

std::vector<LemmaViolation> check_lemma(const std::string& id, const EditPair& pair, const Cdawg* base,
                                        L2Mode l2) {
    if (lemma_edit_kind(id) != pair.op.kind)
        throw std::invalid_argument("lemma " + id + " does not apply to edit kind " +
                                    edit_kind_name(pair.op.kind));

    Checker c{pair, id, {}};
    NodeView before(pair.before), after(pair.after);

    Cdawg local_base;
    auto base_graph = [&]() -> const Cdawg& {
        if (base) return *base;
        if (local_base.nodes.empty()) local_base = build_fast(Text(pair.original.bytes.substr(1)));
        return local_base;
    };

    if (id == "L1") check_l1(c, before, after);
    else if (id == "L2") check_l2(c, before, after, l2);
    else if (id == "L3") check_l3(c, before, after);
    else if (id == "L4") check_l4(c, before, after);
    else if (id == "L5") check_l5(c, before);
    else if (id == "L6") check_l6(c, before);
    else if (id == "L7") check_l7(c, before, after, base_graph());
    else if (id == "L8") check_l8(c, before, after, base_graph());
    else if (id == "new_nodes" || id == "new_nodes_sub") check_bound_f(c);
    else if (id == "new_branches_sub") check_bound_g_sub(c);

    return std::move(c.out);
}

std::vector<LemmaViolation> check_lemma(const std::string& id, const Text& t, const EditOp& op,
                                        BuildMode mode, L2Mode l2) {
    EditPair pair = make_edit_pair(t, op, mode);
    return check_lemma(id, pair, nullptr, l2);
}

} // namespace cdawg
