#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "cdawg/build.hpp"
#include "cdawg/exports.hpp"
#include "cdawg/graph.hpp"
#include "cdawg/maximal.hpp"
#include "cdawg/text.hpp"

using namespace cdawg;

namespace {

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

} // namespace

TEST_CASE("size anchors") {
    CHECK(build_fast(Text{""}).size_e == 0);
    CHECK(build_fast(Text{"a"}).size_e == 0);
    CHECK(build_fast(Text{"ab"}).size_e == 2);
    CHECK(build_fast(Text{"abc"}).size_e == 3);
    CHECK(build_fast(Text{"abab"}).size_e == 3);
    CHECK(build_fast(Text{"ababababcababab"}).size_e == 9); // (ab)^4 c (ab)^3
}

TEST_CASE("running example structure") {
    Cdawg g = build_fast(Text{"ababababcababab"});
    REQUIRE(g.nodes.size() == 5);
    CHECK(g.size_e == 9);
    CHECK(g.source().long_label == "");
    CHECK(g.sink().long_label == "ababababcababab");
    CHECK(g.out_degrees() == std::vector<int>{3, 2, 2, 2, 0});
    CHECK(g.find_node("abab") != nullptr);
    CHECK(g.find_node("a") == nullptr);
    CHECK(spell_check(g));
}

TEST_CASE("unary law e equals n minus 1") {
    std::string s;
    for (int n = 1; n <= 60; ++n) {
        s += 'a';
        Cdawg g = build_fast(Text{s});
        CAPTURE(n);
        CHECK(g.size_e == n - 1);
        // the source carries the merged class, labeled a
        CHECK(g.source().long_label == "a");
        CHECK(g.nodes.size() == static_cast<size_t>(n));
        CHECK(spell_check(g));
    }
}

TEST_CASE("fast equals naive over small universes") {
    for (const auto& s : universe("ab", 9)) {
        Text t{s};
        Cdawg fast = build_fast(t);
        Cdawg naive = build_naive(t);
        CAPTURE(s);
        REQUIRE(canonical_equal(fast, naive));
        REQUIRE(spell_check(fast));
    }
    for (const auto& s : universe("abc", 6)) {
        Text t{s};
        CAPTURE(s);
        REQUIRE(canonical_equal(build_fast(t), build_naive(t)));
    }
}

TEST_CASE("checked mode agrees on both routes") {
    CHECK(build(Text{"ababababcababab"}, BuildMode::checked).size_e == 9);
    CHECK(build(Text{"mississippi"}, BuildMode::checked).size_e ==
          build_naive(Text{"mississippi"}).size_e);
}

TEST_CASE("node count equals maximal set size") {
    for (const auto& s : universe("ab", 8)) {
        Text t{s};
        CAPTURE(s);
        CHECK(build_fast(t).nodes.size() == maximal_set(t).members.size());
    }
}

TEST_CASE("determinism") {
    Text t{"abracadabra"};
    Cdawg a = build_fast(t);
    Cdawg b = build_fast(t);
    CHECK(export_json(a) == export_json(b));
    CHECK(export_dot(a) == export_dot(b));
    CHECK(canonical_equal(a, b));
}

TEST_CASE("canonical equality detects differences") {
    CHECK_FALSE(canonical_equal(build_fast(Text{"abab"}), build_fast(Text{"abba"})));
    CHECK_FALSE(canonical_equal(build_fast(Text{"a"}), build_fast(Text{"aa"})));
}

TEST_CASE("spell check rejects a corrupted graph") {
    Cdawg g = build_fast(Text{"abab"});
    REQUIRE(spell_check(g));
    Cdawg broken = g;
    broken.edges.pop_back(); // a substring is no longer spelled
    broken.size_e = static_cast<int>(broken.edges.size());
    CHECK_FALSE(spell_check(broken));
}

TEST_CASE("dot export is frozen") {
    const char* expected =
        "digraph cdawg {\n"
        "  rankdir=LR;\n"
        "  n0 [label=\"\xce\xb5\"];\n"
        "  n1 [label=\"ab\" shape=doublecircle];\n"
        "  n0 -> n1 [label=\"ab\"];\n"
        "  n0 -> n1 [label=\"b\"];\n"
        "}\n";
    CHECK(export_dot(build_fast(Text{"ab"})) == expected);
    CHECK(export_dot(build_fast(Text{""})) ==
          "digraph cdawg {\n  rankdir=LR;\n  n0 [label=\"\xce\xb5\" shape=doublecircle];\n}\n");
}

TEST_CASE("json export is frozen") {
    const char* expected =
        "{\n"
        "  \"edges\": [],\n"
        "  \"n\": 1,\n"
        "  \"nodes\": [\n"
        "    {\n"
        "      \"id\": 0,\n"
        "      \"len\": 1,\n"
        "      \"long\": \"a\",\n"
        "      \"out_degree\": 0\n"
        "    }\n"
        "  ],\n"
        "  \"size_e\": 0,\n"
        "  \"text\": \"a\"\n"
        "}\n";
    CHECK(export_json(build_fast(Text{"a"})) == expected);
}

TEST_CASE("json export is byte safe") {
    // a non-ASCII byte must come out as valid UTF-8, not raw
    Cdawg g = build_fast(Text{std::string("\xffx\xff", 3)});
    std::string doc = export_json(g);
    CHECK(doc.find("ÿ") != std::string::npos);
    CHECK(latin1_to_utf8("\xff") == "\xc3\xbf");
    CHECK(latin1_to_utf8("ab") == "ab");
}
