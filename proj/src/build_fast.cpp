#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>
#include <vector>

#include "cdawg/build.hpp"

namespace cdawg {

namespace {

// Classic online suffix automaton. States are the end-position classes of
// all substrings; first_end tracks each class's smallest end position.
struct SuffixAutomaton {
    struct State {
        std::map<unsigned char, int> next;
        int link = -1;
        int len = 0;
        int first_end = 0;
    };

    std::vector<State> st;
    int last = 0;

    SuffixAutomaton() { st.emplace_back(); }

    void append(unsigned char c, int pos) {
        int cur = static_cast<int>(st.size());
        st.emplace_back();
        st[cur].len = st[last].len + 1;
        st[cur].first_end = pos;
        int p = last;
        while (p != -1 && !st[p].next.count(c)) {
            st[p].next[c] = cur;
            p = st[p].link;
        }
        if (p == -1) {
            st[cur].link = 0;
        } else {
            int q = st[p].next[c];
            if (st[p].len + 1 == st[q].len) {
                st[cur].link = q;
            } else {
                int clone = static_cast<int>(st.size());
                st.push_back(st[q]); // copies transitions, link, first_end
                st[clone].len = st[p].len + 1;
                while (p != -1 && st[p].next[c] == q) {
                    st[p].next[c] = clone;
                    p = st[p].link;
                }
                st[q].link = clone;
                st[cur].link = clone;
            }
        }
        last = cur;
    }
};

Cdawg single_node_graph(const Text& t) {
    Cdawg g;
    g.text = t;
    NodeRecord rec;
    rec.id = 0;
    rec.long_label = t.bytes;
    rec.length = t.size();
    rec.is_source = true;
    rec.is_sink = true;
    g.nodes.push_back(std::move(rec));
    g.size_e = 0;
    return g;
}

// a^n: the classes of "" and of "a" coincide, so the graph is the path
// a -> a^2 -> ... -> a^n with unit labels.
Cdawg unary_graph(const Text& t) {
    const int n = t.size();
    Cdawg g;
    g.text = t;
    for (int len = 1; len <= n; ++len) {
        NodeRecord rec;
        rec.id = len - 1;
        rec.long_label = std::string(t.slice(1, len));
        rec.length = len;
        rec.is_source = len == 1;
        rec.is_sink = len == n;
        g.nodes.push_back(std::move(rec));
    }
    for (int len = 1; len < n; ++len) {
        EdgeRecord e;
        e.from = len - 1;
        e.to = len;
        e.label_begin = len + 1; // the occurrence of "a" ending where the target first ends
        e.label_end = len + 1;
        g.edges.push_back(e);
    }
    g.size_e = n - 1;
    return g;
}

} // namespace

Cdawg build_fast(const Text& t) {
    const int n = t.size();
    if (n == 0) return single_node_graph(t);
    if (t.unary()) return n == 1 ? single_node_graph(t) : unary_graph(t);

    SuffixAutomaton sam;
    for (int i = 1; i <= n; ++i) sam.append(t.at(i), i);
    const auto& st = sam.st;

    // Nodes are the states whose longest member is maximal to the right:
    // branching states, plus every state ending at position n (the suffix-link
    // chain from the last state, which also covers the initial state).
    std::vector<char> marked(st.size(), 0);
    for (size_t s = 0; s < st.size(); ++s)
        if (st[s].next.size() >= 2) marked[s] = 1;
    for (int v = sam.last; v != -1; v = st[static_cast<size_t>(v)].link) marked[static_cast<size_t>(v)] = 1;

    std::vector<int> node_states;
    for (size_t s = 0; s < st.size(); ++s)
        if (marked[s]) node_states.push_back(static_cast<int>(s));

    auto long_of = [&](int s) {
        return t.slice(st[static_cast<size_t>(s)].first_end - st[static_cast<size_t>(s)].len + 1,
                       st[static_cast<size_t>(s)].first_end);
    };
    std::sort(node_states.begin(), node_states.end(), [&](int a, int b) {
        std::string_view la = long_of(a), lb = long_of(b);
        return la.size() != lb.size() ? la.size() < lb.size() : la < lb;
    });

    Cdawg g;
    g.text = t;
    std::vector<int> id_of_state(st.size(), -1);
    for (size_t i = 0; i < node_states.size(); ++i) {
        const int s = node_states[i];
        id_of_state[static_cast<size_t>(s)] = static_cast<int>(i);
        NodeRecord rec;
        rec.id = static_cast<int>(i);
        rec.long_label = std::string(long_of(s));
        rec.length = st[static_cast<size_t>(s)].len;
        rec.is_source = s == 0;
        rec.is_sink = st[static_cast<size_t>(s)].len == n;
        g.nodes.push_back(std::move(rec));
    }

    for (int s : node_states) {
        for (const auto& [c, t0] : st[static_cast<size_t>(s)].next) {
            int u = t0;
            int beta_len = 1;
            while (!marked[static_cast<size_t>(u)]) {
                assert(st[static_cast<size_t>(u)].next.size() == 1);
                u = st[static_cast<size_t>(u)].next.begin()->second;
                ++beta_len;
            }
            EdgeRecord e;
            e.from = id_of_state[static_cast<size_t>(s)];
            e.to = id_of_state[static_cast<size_t>(u)];
            // the label ends wherever the target class first ends
            e.label_end = st[static_cast<size_t>(u)].first_end;
            e.label_begin = e.label_end - beta_len + 1;
            g.edges.push_back(e);
        }
    }

    g.size_e = static_cast<int>(g.edges.size());
    std::sort(g.edges.begin(), g.edges.end(), [&](const EdgeRecord& a, const EdgeRecord& b) {
        if (a.from != b.from) return a.from < b.from;
        return g.label(a) < g.label(b);
    });
    return g;
}

} // namespace cdawg
