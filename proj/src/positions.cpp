#include "cdawg/positions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdawg {

std::string Text::alphabet() const {
    bool seen[256] = {};
    for (unsigned char c : bytes) seen[c] = true;
    std::string out;
    for (int c = 0; c < 256; ++c)
        if (seen[c]) out.push_back(static_cast<char>(c));
    return out;
}

PositionSet begin_positions(std::string_view u, const Text& t) {
    const int n = t.size();
    PositionSet out;
    if (u.empty()) {
        out.resize(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) out[static_cast<size_t>(i) - 1] = i;
        return out;
    }
    const int m = static_cast<int>(u.size());
    for (int i = 1; i + m - 1 <= n; ++i)
        if (t.slice(i, i + m - 1) == u) out.push_back(i);
    return out;
}

PositionSet end_positions(std::string_view u, const Text& t) {
    PositionSet out = begin_positions(u, t);
    const int shift = static_cast<int>(u.size()) - 1;
    if (shift > 0)
        for (int& p : out) p += shift;
    return out;
}

std::string left_class_longest(std::string_view x, const Text& t) {
    if (!x.empty() && begin_positions(x, t).empty())
        throw std::invalid_argument("left_class_longest: string does not occur in text");
    PositionSet ends = end_positions(x, t);
    if (ends.empty()) return std::string(x); // only for x == "" in the empty text
    int len = static_cast<int>(x.size());
    for (;;) {
        // extendable iff every occurrence has a preceding character and they all agree
        if (ends.front() - len < 1) break;
        unsigned char c = t.at(ends.front() - len);
        bool uniform = true;
        for (int e : ends) {
            if (e - len < 1 || t.at(e - len) != c) { uniform = false; break; }
        }
        if (!uniform) break;
        ++len;
    }
    return std::string(t.slice(ends.front() - len + 1, ends.front()));
}

std::string right_class_longest(std::string_view x, const Text& t) {
    if (!x.empty() && begin_positions(x, t).empty())
        throw std::invalid_argument("right_class_longest: string does not occur in text");
    PositionSet begs = begin_positions(x, t);
    if (begs.empty()) return std::string(x);
    const int n = t.size();
    int len = static_cast<int>(x.size());
    for (;;) {
        if (begs.front() + len > n) break;
        unsigned char c = t.at(begs.front() + len);
        bool uniform = true;
        for (int b : begs) {
            if (b + len > n || t.at(b + len) != c) { uniform = false; break; }
        }
        if (!uniform) break;
        ++len;
    }
    return std::string(t.slice(begs.front(), begs.front() + len - 1));
}

std::string extension_chars(std::string_view x, const Text& t) {
    const int n = t.size();
    const int m = static_cast<int>(x.size());
    bool seen[256] = {};
    for (int b : begin_positions(x, t))
        if (b + m <= n) seen[t.at(b + m)] = true;
    std::string out;
    for (int c = 0; c < 256; ++c)
        if (seen[c]) out.push_back(static_cast<char>(c));
    return out;
}

} // namespace cdawg
