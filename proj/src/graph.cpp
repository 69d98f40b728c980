#include "cdawg/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <tuple>
#include <unordered_set>

namespace cdawg {

const NodeRecord* Cdawg::find_node(std::string_view long_label) const {
    auto it = std::partition_point(nodes.begin(), nodes.end(), [&](const NodeRecord& n) {
        return n.long_label.size() != long_label.size() ? n.long_label.size() < long_label.size()
                                                        : n.long_label < long_label;
    });
    if (it == nodes.end() || it->long_label != long_label) return nullptr;
    return &*it;
}

const NodeRecord& Cdawg::source() const {
    for (const auto& n : nodes)
        if (n.is_source) return n;
    assert(false && "graph without source");
    return nodes.front();
}

const NodeRecord& Cdawg::sink() const {
    for (const auto& n : nodes)
        if (n.is_sink) return n;
    assert(false && "graph without sink");
    return nodes.back();
}

std::vector<int> Cdawg::out_degrees() const {
    std::vector<int> deg(nodes.size(), 0);
    for (const auto& e : edges) ++deg[static_cast<size_t>(e.from)];
    return deg;
}

namespace {

using Transition = std::tuple<std::string_view, std::string_view, std::string_view>; // from, label, to

std::vector<Transition> transitions_of(const Cdawg& g) {
    std::vector<Transition> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges)
        out.emplace_back(g.nodes[static_cast<size_t>(e.from)].long_label, g.label(e),
                         g.nodes[static_cast<size_t>(e.to)].long_label);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool canonical_equal(const Cdawg& a, const Cdawg& b) {
    if (a.text != b.text || a.size_e != b.size_e || a.nodes.size() != b.nodes.size()) return false;
    for (size_t i = 0; i < a.nodes.size(); ++i)
        if (a.nodes[i].long_label != b.nodes[i].long_label) return false;
    return transitions_of(a) == transitions_of(b);
}

namespace {

// All distinct non-empty substrings, enumerated by refining begin-position
// groups; avoids the n^2 pairwise dedupe.
std::unordered_set<std::string> distinct_substrings(const Text& t) {
    std::unordered_set<std::string> out;
    const int n = t.size();
    std::vector<std::vector<int>> groups;
    {
        std::map<unsigned char, std::vector<int>> seed;
        for (int i = 1; i <= n; ++i) seed[t.at(i)].push_back(i);
        for (auto& [c, v] : seed) groups.push_back(std::move(v));
    }
    for (int len = 1; !groups.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (auto& g : groups) {
            out.emplace(t.slice(g.front(), g.front() + len - 1));
            std::map<unsigned char, std::vector<int>> split;
            for (int b : g)
                if (b + len <= n) split[t.at(b + len)].push_back(b);
            for (auto& [c, v] : split) next.push_back(std::move(v));
        }
        groups = std::move(next);
    }
    return out;
}

struct SpellWalk {
    const Cdawg& g;
    std::vector<std::vector<const EdgeRecord*>> adj;
    std::unordered_set<std::string> expected;
    std::unordered_set<std::string> seen;
    std::string cur;
    bool ok = true;

    explicit SpellWalk(const Cdawg& graph) : g(graph), adj(graph.nodes.size()) {
        for (const auto& e : g.edges) adj[static_cast<size_t>(e.from)].push_back(&e);
        expected = distinct_substrings(g.text);
    }

    void record() {
        if (!expected.count(cur) || !seen.insert(cur).second) ok = false;
    }

    void dfs(int v) {
        if (!ok) return;
        for (const EdgeRecord* e : adj[static_cast<size_t>(v)]) {
            const size_t mark = cur.size();
            for (char c : g.label(*e)) {
                cur.push_back(c);
                record();
                if (!ok) break;
            }
            if (ok) dfs(e->to);
            cur.resize(mark);
            if (!ok) return;
        }
    }
};

} // namespace

bool spell_check(const Cdawg& c) {
    if (c.nodes.empty()) return false;
    SpellWalk walk(c);
    const NodeRecord& src = c.source();
    walk.cur = src.long_label;
    if (!walk.cur.empty()) walk.record(); // the empty path already spells the source label
    if (walk.ok) walk.dfs(src.id);
    return walk.ok && walk.seen.size() == walk.expected.size();
}

} // namespace cdawg
