#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cdawg/build.hpp"
#include "class_index.hpp"

namespace cdawg {

namespace {

struct NaiveNode {
    std::string_view str;
    std::vector<int> begs;
    bool is_source = false;
};

} // namespace

Cdawg build_naive(const Text& t) {
    const int n = t.size();
    detail::ClassIndex idx(t);

    std::unordered_set<std::string_view> right_longs;
    right_longs.reserve(idx.by_beg.size());
    for (const auto& [begs, cl] : idx.by_beg)
        right_longs.insert(t.slice(cl.beg, cl.beg + cl.len - 1));

    std::vector<NaiveNode> members;
    for (const auto& [ends, cl] : idx.by_end) {
        std::string_view sv = t.slice(cl.beg, cl.beg + cl.len - 1);
        if (!right_longs.count(sv)) continue;
        NaiveNode m;
        m.str = sv;
        m.begs = ends;
        if (cl.len > 0)
            for (int& b : m.begs) b -= cl.len - 1;
        // the node holding the class of "": its end positions are all of {1..n}
        m.is_source = static_cast<int>(ends.size()) == n && (n == 0 || (ends.front() == 1 && ends.back() == n));
        members.push_back(std::move(m));
    }

    std::sort(members.begin(), members.end(), [](const NaiveNode& a, const NaiveNode& b) {
        return a.str.size() != b.str.size() ? a.str.size() < b.str.size() : a.str < b.str;
    });

    Cdawg g;
    g.text = t;
    std::unordered_map<std::string_view, int> id_of;
    for (size_t i = 0; i < members.size(); ++i) {
        NodeRecord rec;
        rec.id = static_cast<int>(i);
        rec.long_label = std::string(members[i].str);
        rec.length = static_cast<int>(members[i].str.size());
        rec.is_source = members[i].is_source;
        rec.is_sink = members[i].str == std::string_view(t.bytes);
        id_of[members[i].str] = rec.id;
        g.nodes.push_back(std::move(rec));
    }

    for (size_t i = 0; i < members.size(); ++i) {
        const NaiveNode& m = members[i];
        const int len = static_cast<int>(m.str.size());
        std::map<unsigned char, std::vector<int>> by_follow;
        for (int b : m.begs)
            if (b + len <= n) by_follow[t.at(b + len)].push_back(b);
        for (auto& [c, child_begs] : by_follow) {
            // the right class of m.str + c shares its begin positions
            auto rit = idx.by_beg.find(child_begs);
            assert(rit != idx.by_beg.end());
            const detail::ClassLongest whole = rit->second;
            std::vector<int> whole_ends(child_begs);
            for (int& e : whole_ends) e += whole.len - 1;
            auto lit = idx.by_end.find(whole_ends);
            assert(lit != idx.by_end.end());
            std::string_view target = t.slice(lit->second.beg, lit->second.beg + lit->second.len - 1);

            EdgeRecord e;
            e.from = static_cast<int>(i);
            e.to = id_of.at(target);
            const int beta_len = whole.len - len;
            assert(beta_len >= 1);
            const int first_end = whole_ends.front();
            e.label_begin = first_end - beta_len + 1;
            e.label_end = first_end;
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

Cdawg build(const Text& t, BuildMode mode) {
    switch (mode) {
    case BuildMode::fast:
        return build_fast(t);
    case BuildMode::naive:
        return build_naive(t);
    case BuildMode::checked: {
        Cdawg f = build_fast(t);
        if (!canonical_equal(f, build_naive(t)))
            throw std::runtime_error("build: fast and naive construction disagree");
        return f;
    }
    }
    throw std::invalid_argument("build: unknown mode");
}

} // namespace cdawg
