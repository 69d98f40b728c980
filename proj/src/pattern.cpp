#include "cdawg/pattern.hpp"

#include <cctype>
#include <stdexcept>

namespace cdawg {

namespace {

constexpr size_t expansion_cap = 100'000'000;

long parse_count(const std::string& s, size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw std::invalid_argument("expand_repeats: '^' needs a number at offset " +
                                    std::to_string(pos));
    long count = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        count = count * 10 + (s[pos] - '0');
        if (count > static_cast<long>(expansion_cap))
            throw std::invalid_argument("expand_repeats: repeat count too large");
        ++pos;
    }
    return count;
}

} // namespace

std::string expand_repeats(const std::string& pattern) {
    std::string out;
    size_t pos = 0;
    while (pos < pattern.size()) {
        std::string unit;
        if (pattern[pos] == '(') {
            size_t close = pattern.find(')', pos + 1);
            if (close == std::string::npos)
                throw std::invalid_argument("expand_repeats: unclosed '(' at offset " +
                                            std::to_string(pos));
            unit = pattern.substr(pos + 1, close - pos - 1);
            if (unit.empty()) throw std::invalid_argument("expand_repeats: empty group");
            if (unit.find('(') != std::string::npos)
                throw std::invalid_argument("expand_repeats: nested '('");
            pos = close + 1;
        } else if (pattern[pos] == ')') {
            throw std::invalid_argument("expand_repeats: stray ')' at offset " +
                                        std::to_string(pos));
        } else if (pattern[pos] == '^') {
            throw std::invalid_argument("expand_repeats: '^' without a preceding atom at offset " +
                                        std::to_string(pos));
        } else {
            unit = pattern.substr(pos, 1);
            ++pos;
        }
        long count = 1;
        if (pos < pattern.size() && pattern[pos] == '^') {
            ++pos;
            count = parse_count(pattern, pos);
        }
        if (out.size() + unit.size() * static_cast<size_t>(count) > expansion_cap)
            throw std::invalid_argument("expand_repeats: expansion too large");
        for (long rep = 0; rep < count; ++rep) out += unit;
    }
    return out;
}

} // namespace cdawg
