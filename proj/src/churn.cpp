#include "cdawg/churn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "cdawg/build.hpp"
#include "cdawg/exports.hpp"
#include "cdawg/families.hpp"

namespace cdawg {

namespace {

using EdgeKey = std::tuple<std::string, std::string, std::string>;

std::vector<EdgeKey> edge_keys(const Cdawg& g) {
    std::vector<EdgeKey> keys;
    keys.reserve(g.edges.size());
    for (const auto& e : g.edges)
        keys.emplace_back(g.nodes[static_cast<size_t>(e.from)].long_label,
                          std::string(g.label(e)),
                          g.nodes[static_cast<size_t>(e.to)].long_label);
    std::sort(keys.begin(), keys.end());
    return keys;
}

std::vector<std::string> node_keys(const Cdawg& g) {
    std::vector<std::string> keys;
    keys.reserve(g.nodes.size());
    for (const auto& n : g.nodes) keys.push_back(n.long_label);
    std::sort(keys.begin(), keys.end());
    return keys;
}

// (in b but not a, in a but not b) over two sorted key vectors
template <class Key>
std::pair<int, int> sorted_diff(const std::vector<Key>& a, const std::vector<Key>& b) {
    int added = 0, removed = 0;
    size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] < b[ib]) {
            ++removed;
            ++ia;
        } else if (b[ib] < a[ia]) {
            ++added;
            ++ib;
        } else {
            ++ia;
            ++ib;
        }
    }
    added += static_cast<int>(b.size() - ib);
    removed += static_cast<int>(a.size() - ia);
    return {added, removed};
}

} // namespace

std::pair<int, int> edge_diff(const Cdawg& a, const Cdawg& b) {
    return sorted_diff(edge_keys(a), edge_keys(b));
}

ChurnReport leftward_run(const Text& t, const ChurnCallback& per_step) {
    if (t.bytes.empty()) throw std::invalid_argument("leftward_run: empty text");
    const int n = static_cast<int>(t.bytes.size());
    ChurnReport rep;
    rep.text = t;
    rep.steps.reserve(static_cast<size_t>(n));
    std::vector<EdgeKey> prev_edges;
    std::vector<std::string> prev_nodes;
    for (int i = n; i >= 1; --i) {
        Cdawg g = build_fast(Text{t.bytes.substr(static_cast<size_t>(i - 1))});
        std::vector<EdgeKey> cur_edges = edge_keys(g);
        std::vector<std::string> cur_nodes = node_keys(g);
        auto [added, removed] = sorted_diff(prev_edges, cur_edges);
        auto [nodes_added, nodes_removed] = sorted_diff(prev_nodes, cur_nodes);
        ChurnStep step{i, n - i + 1, g.size_e, added, removed, nodes_added, nodes_removed};
        rep.steps.push_back(step);
        rep.total_churn += added + removed;
        if (per_step) per_step(step, g);
        prev_edges = std::move(cur_edges);
        prev_nodes = std::move(cur_nodes);
    }
    return rep;
}

ChurnQuadraticReport churn_quadratic_check(int m) {
    if (m < 1) throw std::invalid_argument("churn_quadratic_check: m must be positive");
    ChurnQuadraticReport rep;
    rep.m = m;
    const Text tm = family_string({FamilyKind::online, m, m});
    rep.run = leftward_run(tm);
    const int n = static_cast<int>(tm.bytes.size()); // 8m+4
    auto step_at = [&](int i) -> const ChurnStep& {
        return rep.run.steps[static_cast<size_t>(n - i)];
    };
    auto complain = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };

    // size of the suffix T_{k,m} = T[2(m-k)+1..n], all k
    for (int k = 0; k <= m; ++k) {
        const int i = 2 * (m - k) + 1;
        const int want = 5 * m + k + 4;
        if (step_at(i).e != want)
            complain("k=" + std::to_string(k) + ": e(T_{k,m})=" + std::to_string(step_at(i).e) +
                     ", expected " + std::to_string(want));
    }
    // the two prepend steps of each transition, k = 0..m-1
    for (int k = 0; k < m; ++k) {
        const int i_b = 2 * (m - k);
        const ChurnStep& sb = step_at(i_b);
        const ChurnStep& sa = step_at(i_b - 1);
        const int delta_b = sb.added - sb.removed;
        const int delta_a = sa.added - sa.removed;
        const int want_e = 8 * m + 4 * k + 7;
        const int want_b = 3 * m + 3 * k + 3;
        const int want_a = -(3 * m + 3 * k + 2);
        if (sb.e != want_e)
            complain("k=" + std::to_string(k) + ": e(bT_{k,m})=" + std::to_string(sb.e) +
                     ", expected " + std::to_string(want_e));
        if (delta_b != want_b)
            complain("k=" + std::to_string(k) + ": b-prepend delta=" + std::to_string(delta_b) +
                     ", expected " + std::to_string(want_b));
        if (delta_a != want_a)
            complain("k=" + std::to_string(k) + ": a-prepend delta=" + std::to_string(delta_a) +
                     ", expected " + std::to_string(want_a));
        rep.transitions.push_back({k, i_b, delta_b, -delta_a});
        rep.transition_churn += std::abs(delta_b) + std::abs(delta_a);
    }
    rep.ok = rep.failures.empty();
    return rep;
}

double churn_growth_exponent(const std::vector<std::pair<int, long>>& points) {
    if (points.size() < 2)
        throw std::invalid_argument("churn_growth_exponent: need at least two points");
    double sx = 0, sy = 0;
    for (const auto& [m, churn] : points) {
        if (m < 1 || churn < 1)
            throw std::invalid_argument("churn_growth_exponent: nonpositive point");
        sx += std::log(static_cast<double>(m));
        sy += std::log(static_cast<double>(churn));
    }
    const double mx = sx / static_cast<double>(points.size());
    const double my = sy / static_cast<double>(points.size());
    double num = 0, den = 0;
    for (const auto& [m, churn] : points) {
        const double dx = std::log(static_cast<double>(m)) - mx;
        num += dx * (std::log(static_cast<double>(churn)) - my);
        den += dx * dx;
    }
    if (den == 0) throw std::invalid_argument("churn_growth_exponent: degenerate m values");
    return num / den;
}

std::string ChurnReport::to_tsv() const {
    std::string out = "i\tsuffix_len\te\tadded\tremoved\tnodes_added\tnodes_removed\n";
    for (const auto& s : steps)
        out += std::to_string(s.i) + '\t' + std::to_string(s.suffix_len) + '\t' +
               std::to_string(s.e) + '\t' + std::to_string(s.added) + '\t' +
               std::to_string(s.removed) + '\t' + std::to_string(s.nodes_added) + '\t' +
               std::to_string(s.nodes_removed) + '\n';
    return out;
}

namespace {

nlohmann::json steps_json(const ChurnReport& rep) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : rep.steps) {
        arr.push_back({{"i", s.i},
                       {"suffix_len", s.suffix_len},
                       {"e", s.e},
                       {"added", s.added},
                       {"removed", s.removed},
                       {"nodes_added", s.nodes_added},
                       {"nodes_removed", s.nodes_removed}});
    }
    return arr;
}

} // namespace

std::string ChurnReport::to_json() const {
    nlohmann::json doc;
    doc["text"] = latin1_to_utf8(text.bytes);
    doc["n"] = text.bytes.size();
    doc["total_churn"] = total_churn;
    doc["steps"] = steps_json(*this);
    return doc.dump(2) + "\n";
}

std::string ChurnQuadraticReport::to_text() const {
    std::string out = "leftward churn on (ab)^" + std::to_string(2 * m) + " c ab (ab)^" +
                      std::to_string(2 * m) + " $ (m=" + std::to_string(m) +
                      ", n=" + std::to_string(run.text.bytes.size()) + ")\n";
    out += "total churn " + std::to_string(run.total_churn) + ", transition churn " +
           std::to_string(transition_churn) + " (9m^2+2m = " +
           std::to_string(9L * m * m + 2L * m) + ")\n";
    for (const auto& tr : transitions)
        out += "  k=" + std::to_string(tr.k) + ": b-prepend at i=" + std::to_string(tr.i_b) +
               " delta +" + std::to_string(tr.delta_b) + ", then a-prepend delta -" +
               std::to_string(tr.delta_a) + "\n";
    for (const auto& f : failures) out += "  MISMATCH " + f + "\n";
    out += ok ? "all per-transition formulas hold\n" : "FORMULA MISMATCHES FOUND\n";
    return out;
}

std::string ChurnQuadraticReport::to_json() const {
    nlohmann::json doc;
    doc["m"] = m;
    doc["n"] = run.text.bytes.size();
    doc["ok"] = ok;
    doc["total_churn"] = run.total_churn;
    doc["transition_churn"] = transition_churn;
    nlohmann::json trs = nlohmann::json::array();
    for (const auto& tr : transitions)
        trs.push_back(
            {{"k", tr.k}, {"i_b", tr.i_b}, {"delta_b", tr.delta_b}, {"delta_a", tr.delta_a}});
    doc["transitions"] = trs;
    doc["failures"] = failures;
    doc["steps"] = steps_json(run);
    return doc.dump(2) + "\n";
}

} // namespace cdawg
