#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdawg/build.hpp"
#include "cdawg/churn.hpp"
#include "cdawg/families.hpp"
#include "cdawg/text.hpp"

using namespace cdawg;

TEST_CASE("edge diff") {
    Cdawg g = build_fast(Text{"ababab"});
    CHECK(edge_diff(g, g) == std::pair{0, 0});

    // deleting the leading a of (ab)^2 c ab: edges move both ways
    Cdawg a = build_fast(Text{"ababcab"});
    Cdawg b = build_fast(Text{"babcab"});
    auto [added, removed] = edge_diff(a, b);
    CHECK(added - removed == b.size_e - a.size_e);
    CHECK(added > 0);
    CHECK(removed > 0);
}

TEST_CASE("leftward run on a short text") {
    ChurnReport r = leftward_run(Text{"abab"});
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0].i == 4);
    CHECK(r.steps[3].i == 1);
    std::vector<int> es, added, removed;
    for (const auto& s : r.steps) {
        es.push_back(s.e);
        added.push_back(s.added);
        removed.push_back(s.removed);
    }
    CHECK(es == std::vector<int>{0, 2, 3, 3});
    CHECK(added == std::vector<int>{0, 2, 3, 3});
    CHECK(removed == std::vector<int>{0, 0, 2, 3});
    CHECK(r.total_churn == 0 + 2 + 5 + 6);
    CHECK_THROWS_AS((void)leftward_run(Text{""}), std::invalid_argument);
}

TEST_CASE("conservation: added minus removed equals the size delta") {
    for (const char* s : {"mississippi", "abracadabra", "aabbaabb", "abcabcabc"}) {
        ChurnReport r = leftward_run(Text{s});
        int prev_e = 0;
        for (const auto& st : r.steps) {
            CAPTURE(s);
            CAPTURE(st.i);
            CHECK(st.added - st.removed == st.e - prev_e);
            prev_e = st.e;
        }
    }
}

TEST_CASE("unary text churns one edge per step") {
    ChurnReport r = leftward_run(Text{"aaaaa"});
    for (size_t idx = 1; idx < r.steps.size(); ++idx) {
        CHECK(r.steps[idx].added == 1);
        CHECK(r.steps[idx].removed == 0);
    }
    CHECK(r.total_churn == 4);
}

TEST_CASE("tsv output is frozen") {
    const char* expected =
        "i\tsuffix_len\te\tadded\tremoved\tnodes_added\tnodes_removed\n"
        "4\t1\t0\t0\t0\t1\t0\n"
        "3\t2\t2\t2\t0\t2\t1\n"
        "2\t3\t3\t3\t2\t2\t1\n"
        "1\t4\t3\t3\t3\t2\t2\n";
    CHECK(leftward_run(Text{"abab"}).to_tsv() == expected);
}

TEST_CASE("the worst-case walk hits the predicted sizes") {
    // m=2: the suffix at i=3 is the k=1 member (15 edges); prepending b
    // jumps to 27; prepending the final a lands on the k=2 member (16)
    ChurnReport r = leftward_run(family_string({FamilyKind::online, 2, 2}));
    REQUIRE(r.steps.size() == 20);
    auto e_at = [&](int i) { return r.steps[static_cast<size_t>(20 - i)].e; };
    CHECK(e_at(5) == 14); // k=0 member
    CHECK(e_at(4) == 23); // b-prepend: +9
    CHECK(e_at(3) == 15); // k=1 member: -8
    CHECK(e_at(2) == 27); // b-prepend: +12
    CHECK(e_at(1) == 16); // k=2 member: -11
}

TEST_CASE("per-transition formulas for small m") {
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        ChurnQuadraticReport rep = churn_quadratic_check(m);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
        REQUIRE(rep.transitions.size() == static_cast<size_t>(m));
        long sum = 0;
        for (const auto& tr : rep.transitions) {
            CHECK(tr.delta_b == 3 * m + 3 * tr.k + 3);
            CHECK(tr.delta_a == 3 * m + 3 * tr.k + 2);
            CHECK(tr.i_b == 2 * (m - tr.k));
            sum += tr.delta_b + tr.delta_a;
        }
        CHECK(sum == 9L * m * m + 2 * m);
        CHECK(rep.transition_churn == sum);
    }
    CHECK_THROWS_AS((void)churn_quadratic_check(0), std::invalid_argument);
}

TEST_CASE("transition churn grows quadratically") {
    std::vector<std::pair<int, long>> points;
    for (int m : {4, 8, 16}) {
        ChurnQuadraticReport rep = churn_quadratic_check(m);
        REQUIRE(rep.ok);
        CHECK(rep.transition_churn == 9L * m * m + 2 * m);
        points.emplace_back(m, rep.transition_churn);
    }
    double slope = churn_growth_exponent(points);
    CHECK(std::abs(slope - 1.9709) < 1e-3); // measured once, frozen
    CHECK(slope > 1.9);
    CHECK(slope < 2.1);
}

TEST_CASE("growth exponent input validation") {
    CHECK_THROWS_AS((void)churn_growth_exponent({}), std::invalid_argument);
    CHECK_THROWS_AS((void)churn_growth_exponent({{4, 100L}}), std::invalid_argument);
    CHECK_THROWS_AS((void)churn_growth_exponent({{4, 0L}, {8, 100L}}), std::invalid_argument);
    CHECK_THROWS_AS((void)churn_growth_exponent({{4, 10L}, {4, 20L}}), std::invalid_argument);
    // exact quadratic data gives exactly 2
    CHECK(churn_growth_exponent({{2, 16L}, {4, 64L}}) == doctest::Approx(2.0));
}

TEST_CASE("quadratic report renders") {
    ChurnQuadraticReport rep = churn_quadratic_check(2);
    std::string text = rep.to_text();
    CHECK(text.find("transition churn 40") != std::string::npos);
    CHECK(text.find("all per-transition formulas hold") != std::string::npos);
    std::string doc = rep.to_json();
    CHECK(doc.find("\"transition_churn\": 40") != std::string::npos);
}
