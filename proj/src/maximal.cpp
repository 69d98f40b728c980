#include "cdawg/maximal.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "class_index.hpp"

namespace cdawg {

namespace detail {

ClassIndex::ClassIndex(const Text& t) {
    const int n = t.size();
    std::vector<int> full(static_cast<size_t>(n));
    std::iota(full.begin(), full.end(), 1);
    by_beg[full] = ClassLongest{0, 1};
    by_end[std::move(full)] = ClassLongest{0, 1};

    auto record = [&](int len, const std::vector<int>& begs) {
        ClassLongest cand{len, begs.front()};
        auto& l = by_beg[begs];
        if (len > l.len) l = cand;
        std::vector<int> ends(begs);
        for (int& e : ends) e += len - 1;
        auto& r = by_end[std::move(ends)];
        if (len > r.len) r = cand;
    };

    // Refine begin-position groups one character at a time; each group is the
    // occurrence list of one distinct substring of the current length.
    std::vector<std::vector<int>> groups;
    {
        std::map<unsigned char, std::vector<int>> seed;
        for (int i = 1; i <= n; ++i) seed[t.at(i)].push_back(i);
        for (auto& [c, v] : seed) groups.push_back(std::move(v));
    }
    for (int len = 1; !groups.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (auto& g : groups) {
            record(len, g);
            std::map<unsigned char, std::vector<int>> split;
            for (int b : g)
                if (b + len <= n) split[t.at(b + len)].push_back(b);
            for (auto& [c, v] : split) next.push_back(std::move(v));
        }
        groups = std::move(next);
    }
}

} // namespace detail

const MaximalEntry* MaximalSet::find(std::string_view s) const {
    auto it = std::partition_point(members.begin(), members.end(), [&](const MaximalEntry& e) {
        return e.str.size() != s.size() ? e.str.size() < s.size() : e.str < s;
    });
    if (it == members.end() || it->str != s) return nullptr;
    return &*it;
}

std::vector<std::string> MaximalSet::strings() const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (const auto& e : members) out.push_back(e.str);
    return out;
}

MaximalSet maximal_set(const Text& t) {
    detail::ClassIndex idx(t);

    std::unordered_set<std::string_view> right_longs;
    right_longs.reserve(idx.by_beg.size());
    for (const auto& [begs, cl] : idx.by_beg)
        right_longs.insert(t.slice(cl.beg, cl.beg + cl.len - 1));

    MaximalSet out;
    for (const auto& [ends, cl] : idx.by_end) {
        std::string_view sv = t.slice(cl.beg, cl.beg + cl.len - 1);
        if (!right_longs.count(sv)) continue;
        MaximalEntry e;
        e.str = std::string(sv);
        e.end_positions = ends;
        bool seen[256] = {};
        for (int end : ends) {
            // follower = begin + len; for "" begin and end coincide, so the
            // follower is the character at the position itself
            int follow = cl.len == 0 ? end : end + 1;
            if (follow <= t.size()) seen[t.at(follow)] = true;
        }
        for (int c = 0; c < 256; ++c)
            if (seen[c]) e.right_extensions.push_back(static_cast<char>(c));
        out.members.push_back(std::move(e));
    }
    std::sort(out.members.begin(), out.members.end(), [](const MaximalEntry& a, const MaximalEntry& b) {
        return a.str.size() != b.str.size() ? a.str.size() < b.str.size() : a.str < b.str;
    });
    return out;
}

std::vector<std::string> maximal_repeats(const Text& t) {
    std::vector<std::string> out;
    for (const auto& e : maximal_set(t).members) {
        if (e.end_positions.size() < 2) continue;
        if (e.str.empty() || e.str == t.bytes) continue;
        out.push_back(e.str);
    }
    return out;
}

int out_degree(std::string_view x, const Text& t) {
    const MaximalEntry* e = maximal_set(t).find(x);
    if (!e) throw std::invalid_argument("out_degree: not a maximal substring");
    return static_cast<int>(e->right_extensions.size());
}

} // namespace cdawg
