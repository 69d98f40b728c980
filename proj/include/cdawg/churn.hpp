#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cdawg/graph.hpp"
#include "cdawg/text.hpp"

namespace cdawg {

// Leftward online construction experiment: maintain CDAWG(T[i..n]) for
// i = n down to 1 (rebuild per step — no incremental algorithm is claimed)
// and measure the edge churn each step causes. Edges are identified by
// (source maximal substring, label literal, target maximal substring), so
// added - removed always equals the size delta. Node churn is reported
// informationally; no formula is asserted on it.

struct ChurnStep {
    int i = 0;          // new left endpoint, 1-based
    int suffix_len = 0; // n - i + 1
    int e = 0;          // e(T[i..n])
    int added = 0;
    int removed = 0;
    int nodes_added = 0;
    int nodes_removed = 0;
};

struct ChurnReport {
    Text text;
    std::vector<ChurnStep> steps; // ordered by decreasing i
    long total_churn = 0;         // sum of added + removed

    std::string to_tsv() const;
    std::string to_json() const;
};

// (added, removed) from a to b; added - removed == b.size_e - a.size_e.
std::pair<int, int> edge_diff(const Cdawg& a, const Cdawg& b);

using ChurnCallback = std::function<void(const ChurnStep&, const Cdawg&)>;
ChurnReport leftward_run(const Text& t, const ChurnCallback& per_step = nullptr);

// One prepend transition of the worst-case run on (ab)^{2m} c ab (ab)^{2m} $:
// prepending b at i = 2(m-k) jumps the size by 3m+3k+3, and the a right
// before it (i = 2(m-k)-1) drops it by 3m+3k+2, for k = 0..m-1.
struct ChurnTransition {
    int k = 0;
    int i_b = 0; // left endpoint of the b-prepend step
    int delta_b = 0;
    int delta_a = 0; // |delta| of the following a-prepend step
};

struct ChurnQuadraticReport {
    int m = 0;
    ChurnReport run;
    std::vector<ChurnTransition> transitions; // k ascending
    long transition_churn = 0;                // sum of |delta| over transition steps, 9m^2+2m
    bool ok = false;
    std::vector<std::string> failures;

    std::string to_text() const;
    std::string to_json() const;
};

ChurnQuadraticReport churn_quadratic_check(int m); // throws on m < 1

// Least-squares slope of log(churn) against log(m).
double churn_growth_exponent(const std::vector<std::pair<int, long>>& points);

} // namespace cdawg
