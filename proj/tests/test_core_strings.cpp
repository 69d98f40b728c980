#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdawg/maximal.hpp"
#include "cdawg/positions.hpp"
#include "cdawg/text.hpp"

using namespace cdawg;

namespace {

// every string over alphabet with length in [0..max_len], lexicographic within length
std::vector<std::string> universe(const std::string& alphabet, int max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> prev{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const auto& s : prev)
            for (char c : alphabet) next.push_back(s + c);
        out.insert(out.end(), next.begin(), next.end());
        prev = std::move(next);
    }
    return out;
}

// all distinct substrings including ""
std::vector<std::string> distinct_substrings(const Text& t) {
    std::vector<std::string> subs{""};
    for (int i = 1; i <= t.size(); ++i)
        for (int j = i; j <= t.size(); ++j) subs.emplace_back(t.slice(i, j));
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    return subs;
}

} // namespace

TEST_CASE("begin and end positions") {
    Text t{"ababab"};
    CHECK(begin_positions("ab", t) == PositionSet{1, 3, 5});
    CHECK(end_positions("ab", t) == PositionSet{2, 4, 6});
    CHECK(begin_positions("ba", t) == PositionSet{2, 4});
    CHECK(begin_positions("", t) == PositionSet{1, 2, 3, 4, 5, 6});
    CHECK(end_positions("", t) == PositionSet{1, 2, 3, 4, 5, 6});
    CHECK(begin_positions("zz", t).empty());
    CHECK(begin_positions("ababab", t) == PositionSet{1});
    CHECK(begin_positions("", Text{""}).empty());
}

TEST_CASE("class longest representatives") {
    Text t{"ababababcababab"}; // (ab)^4 c (ab)^3
    // every occurrence of b is preceded by a, so b's left class reaches ab
    CHECK(left_class_longest("b", t) == "ab");
    CHECK(left_class_longest("ab", t) == "ab");
    // a is always followed by b, so its right class reaches ab
    CHECK(right_class_longest("a", t) == "ab");
    CHECK(left_class_longest("abab", t) == "abab");
    CHECK(right_class_longest("cab", t) == "cababab");
    CHECK_THROWS_AS((void)left_class_longest("zz", t), std::invalid_argument);

    // unary text: "" has end positions {1..n}, same as the set of a's, so
    // its left class deepens to a
    Text u{"aaaa"};
    CHECK(left_class_longest("", u) == "a");
    CHECK(right_class_longest("", u) == "a");
}

TEST_CASE("extension characters") {
    Text t{"ababababcababab"};
    CHECK(extension_chars("", t) == "abc");
    CHECK(extension_chars("ab", t) == "ac");  // abab... and abc...
    CHECK(extension_chars("ababab", t) == "ac");
    CHECK(extension_chars("abababab", t) == "c");
    CHECK(extension_chars("b", t) == "ac");
    CHECK(extension_chars(t.bytes, t).empty()); // whole text has no follower
    CHECK(extension_chars("zz", t).empty());
    CHECK(extension_chars("aaa", Text{"aaaa"}) == "a");
    CHECK(extension_chars("aaaa", Text{"aaaa"}).empty());
}

TEST_CASE("maximal set of the running example") {
    Text t{"ababababcababab"};
    MaximalSet m = maximal_set(t);
    CHECK(m.strings() == std::vector<std::string>{"", "ab", "abab", "ababab", t.bytes});
    CHECK(m.contains("ab"));
    CHECK_FALSE(m.contains("a"));
    CHECK_FALSE(m.contains("abababab"));

    CHECK(out_degree("", t) == 3);
    CHECK(out_degree("ab", t) == 2);
    CHECK(out_degree("abab", t) == 2);
    CHECK(out_degree("ababab", t) == 2);
    CHECK(out_degree(t.bytes, t) == 0);
    CHECK_THROWS_AS((void)out_degree("a", t), std::invalid_argument);

    CHECK(maximal_repeats(t) == std::vector<std::string>{"ab", "abab", "ababab"});
}

TEST_CASE("maximal set basics") {
    CHECK(maximal_set(Text{""}).strings() == std::vector<std::string>{""});
    CHECK(maximal_set(Text{"a"}).strings() == std::vector<std::string>{"a"});
    CHECK(maximal_set(Text{"ab"}).strings() == std::vector<std::string>{"", "ab"});
    CHECK(maximal_set(Text{"abab"}).strings() == std::vector<std::string>{"", "ab", "abab"});
    CHECK(maximal_set(Text{"abcbc"}).strings() == std::vector<std::string>{"", "bc", "abcbc"});
    // unary: "" shares its occurrence classes with a, so the source label is a
    CHECK(maximal_set(Text{"aaaa"}).strings() ==
          std::vector<std::string>{"a", "aa", "aaa", "aaaa"});
    CHECK(maximal_repeats(Text{"aaaa"}) == std::vector<std::string>{"a", "aa", "aaa"});
    CHECK(maximal_repeats(Text{"abab"}) == std::vector<std::string>{"ab"});
    CHECK(maximal_repeats(Text{"ab"}).empty());
}

TEST_CASE("maximality is the two-sided longest-class fixpoint") {
    for (const auto& s : universe("abc", 5)) {
        Text t{s};
        MaximalSet m = maximal_set(t);
        CAPTURE(s);
        // t itself is always maximal; "" iff two distinct characters
        CHECK(m.contains(s));
        if (!t.empty()) CHECK(m.contains("") == (t.sigma() >= 2));
        for (const auto& u : distinct_substrings(t)) {
            if (t.empty()) break; // "" has no occurrences in ""
            bool fix = left_class_longest(u, t) == u && right_class_longest(u, t) == u;
            CAPTURE(u);
            CHECK(m.contains(u) == fix);
        }
        // members carry consistent occurrence data
        for (const auto& entry : m.members) {
            CHECK(entry.end_positions == end_positions(entry.str, t));
            CHECK(begin_positions(entry.str, t).size() == entry.end_positions.size());
            CHECK(entry.right_extensions == extension_chars(entry.str, t));
        }
    }
}
