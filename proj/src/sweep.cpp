#include "cdawg/sweep.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "cdawg/build.hpp"
#include "cdawg/exports.hpp"

namespace cdawg {

namespace {

constexpr long universe_cap = 200'000'000L; // strings, not pairs

long universe_size(int sigma, int max_len) {
    long total = 0;
    long cnt = 1;
    for (int len = 0; len <= max_len; ++len) {
        total += cnt;
        if (total > universe_cap) throw std::invalid_argument("sweep: universe too large");
        if (len < max_len) {
            if (cnt > universe_cap / sigma + 1) throw std::invalid_argument("sweep: universe too large");
            cnt *= sigma;
        }
    }
    return total;
}

// Global index -> string: lengths ascending, lexicographic within a length.
std::string index_to_string(const std::string& alphabet, int max_len, long idx) {
    const long sigma = static_cast<long>(alphabet.size());
    long cnt = 1;
    for (int len = 0; len <= max_len; ++len) {
        if (idx < cnt) {
            std::string s(static_cast<size_t>(len), alphabet[0]);
            for (int pos = len - 1; pos >= 0; --pos) {
                s[static_cast<size_t>(pos)] = alphabet[static_cast<size_t>(idx % sigma)];
                idx /= sigma;
            }
            return s;
        }
        idx -= cnt;
        cnt *= sigma;
    }
    throw std::logic_error("index_to_string: index out of range");
}

std::vector<std::string> expand_checks(const std::vector<std::string>& requested) {
    std::set<std::string> want;
    for (const auto& id : requested) {
        if (id == "all") {
            for (const auto& lemma : lemma_ids()) want.insert(lemma);
            want.insert("bound");
            want.insert("fg");
        } else if (id == "bound" || id == "fg") {
            want.insert(id);
        } else {
            lemma_edit_kind(id); // throws on unknown id
            want.insert(id);
        }
    }
    std::vector<std::string> out;
    for (const auto& lemma : lemma_ids())
        if (want.count(lemma)) out.push_back(lemma);
    if (want.count("bound")) out.push_back("bound");
    if (want.count("fg")) out.push_back("fg");
    return out;
}

std::vector<EditOp> applicable_ops(const Text& t, const SweepOptions& opt) {
    std::vector<EditOp> out;
    for (EditKind kind : opt.ops) {
        switch (kind) {
        case EditKind::insert:
            for (char c : opt.alphabet) out.push_back({kind, c});
            break;
        case EditKind::remove:
            if (!t.bytes.empty()) out.push_back({kind, '\0'});
            break;
        case EditKind::substitute:
            if (!t.bytes.empty())
                for (char c : opt.alphabet)
                    if (c != t.bytes[0]) out.push_back({kind, c});
            break;
        }
    }
    return out;
}

// Order-independent "is this witness more extreme": larger delta, then
// shorter text, then smaller text, then smaller edit character.
bool more_extreme(int delta, const std::string& text, const EditOp& op,
                  int cur_delta, const std::string& cur_text, const EditOp& cur_op) {
    if (delta != cur_delta) return delta > cur_delta;
    if (text.size() != cur_text.size()) return text.size() < cur_text.size();
    if (text != cur_text) return text < cur_text;
    return op.ch < cur_op.ch;
}

std::string repro_command(const Text& t, const EditOp& op, const std::string& check_id) {
    std::string cmd = "cdawg delta --op " + std::string(edit_kind_name(op.kind));
    if (op.kind != EditKind::remove) cmd += std::string(" --char ") + op.ch;
    cmd += " --check " + check_id + " \"" + t.bytes + "\"";
    return cmd;
}

struct Partial {
    long strings = 0;
    long pairs = 0;
    std::map<EditKind, OpStats> per_op;
    std::vector<SweepViolation> violations;
};

struct Worker {
    const SweepOptions& opt;
    const std::vector<std::string>& checks;
    long total;
    int stride;
    Partial out;

    bool has_check(const std::string& id) const {
        return std::find(checks.begin(), checks.end(), id) != checks.end();
    }

    void flag(const std::string& check_id, const Text& t, const EditOp& op,
              const std::string& witness, const std::string& detail) {
        out.violations.push_back({check_id, t.bytes, op, witness, detail,
                                  repro_command(t, op, check_id)});
    }

    void run(long first) {
        const BuildMode mode = opt.verify_with_naive ? BuildMode::checked : BuildMode::fast;
        for (long idx = first; idx < total; idx += stride) {
            Text t{index_to_string(opt.alphabet, opt.max_len, idx)};
            ++out.strings;
            Cdawg before = build(t, mode);
            if (opt.spell && !spell_check(before)) {
                flag("spell", t, {EditKind::remove, '\0'}, t.bytes,
                     "graph does not spell the distinct substrings exactly once");
                continue;
            }
            Cdawg base_for_sub; // deletion image S, built on first use
            bool have_base = false;
            for (const EditOp& op : applicable_ops(t, opt)) check_pair(t, before, op, mode, base_for_sub, have_base);
        }
    }

    void check_pair(const Text& t, const Cdawg& before, const EditOp& op, BuildMode mode,
                    Cdawg& base_for_sub, bool& have_base) {
        EditPair pair;
        pair.original = t;
        pair.op = op;
        pair.before = before;
        pair.edited = apply_left_edit(t, op);
        pair.after = build(pair.edited, mode);
        if (opt.spell && !spell_check(pair.after)) {
            flag("spell", t, op, pair.edited.bytes,
                 "edited graph does not spell the distinct substrings exactly once");
            return;
        }

        ++out.pairs;
        OpStats& st = out.per_op[op.kind];
        ++st.pairs;
        const int e = before.size_e;
        const int d = pair.after.size_e - e;

        const SizeBound bound = size_bound(t, op, e);
        if (bound.applies) {
            ++st.bounded_pairs;
            if (more_extreme(d, t.bytes, op, st.max_delta, st.max_text, st.max_op)) {
                st.max_delta = d;
                st.max_text = t.bytes;
                st.max_op = op;
            }
            if (has_check("bound") && d > bound.limit)
                flag("bound", t, op, pair.edited.bytes,
                     "delta=" + std::to_string(d) + " exceeds " + std::to_string(bound.limit) +
                         " (e=" + std::to_string(e) + ")");
        } else if (more_extreme(d, t.bytes, op, st.out_max_delta, st.out_max_text, st.out_max_op)) {
            st.out_max_delta = d;
            st.out_max_text = t.bytes;
            st.out_max_op = op;
        }

        if (has_check("fg")) {
            DeltaReport rep = delta_from_graphs(pair.before, pair.after, op);
            if (rep.delta > rep.F + rep.G)
                flag("fg", t, op, pair.edited.bytes,
                     "delta=" + std::to_string(rep.delta) + " > F+G=" +
                         std::to_string(rep.F + rep.G));
            const int g_limit = op.kind == EditKind::remove ? 0 : 1;
            if (rep.G > g_limit)
                flag("fg", t, op,
                     rep.degree_increased_nodes.empty() ? "" : rep.degree_increased_nodes.front(),
                     "G=" + std::to_string(rep.G) + " exceeds " + std::to_string(g_limit));
        }

        for (const auto& id : checks) {
            if (id == "bound" || id == "fg") continue;
            if (lemma_edit_kind(id) != op.kind) continue;
            const Cdawg* base = nullptr;
            if (op.kind == EditKind::substitute) {
                if (!have_base) {
                    base_for_sub = build_fast(Text{t.bytes.substr(1)});
                    have_base = true;
                }
                base = &base_for_sub;
            }
            for (auto& v : check_lemma(id, pair, base, opt.l2))
                flag(v.lemma_id, t, op, v.witness, v.detail);
        }
    }
};

void merge_stats(OpStats& into, const OpStats& from) {
    into.pairs += from.pairs;
    into.bounded_pairs += from.bounded_pairs;
    if (from.max_delta != INT_MIN &&
        more_extreme(from.max_delta, from.max_text, from.max_op, into.max_delta, into.max_text,
                     into.max_op)) {
        into.max_delta = from.max_delta;
        into.max_text = from.max_text;
        into.max_op = from.max_op;
    }
    if (from.out_max_delta != INT_MIN &&
        more_extreme(from.out_max_delta, from.out_max_text, from.out_max_op, into.out_max_delta,
                     into.out_max_text, into.out_max_op)) {
        into.out_max_delta = from.out_max_delta;
        into.out_max_text = from.out_max_text;
        into.out_max_op = from.out_max_op;
    }
}

bool violation_less(const SweepViolation& x, const SweepViolation& y) {
    if (x.text.size() != y.text.size()) return x.text.size() < y.text.size();
    if (x.text != y.text) return x.text < y.text;
    if (x.op.kind != y.op.kind) return static_cast<int>(x.op.kind) < static_cast<int>(y.op.kind);
    if (x.op.ch != y.op.ch) return x.op.ch < y.op.ch;
    if (x.check_id != y.check_id) return x.check_id < y.check_id;
    if (x.witness != y.witness) return x.witness < y.witness;
    return x.detail < y.detail;
}

std::string signed_str(int v) { return (v >= 0 ? "+" : "") + std::to_string(v); }

} // namespace

SweepReport sweep(const SweepOptions& opt) {
    if (opt.alphabet.empty()) throw std::invalid_argument("sweep: empty alphabet");
    if (std::set<char>(opt.alphabet.begin(), opt.alphabet.end()).size() != opt.alphabet.size())
        throw std::invalid_argument("sweep: repeated alphabet character");
    if (opt.max_len < 0) throw std::invalid_argument("sweep: negative max_len");
    if (opt.ops.empty()) throw std::invalid_argument("sweep: no edit kinds");

    const std::vector<std::string> checks = expand_checks(opt.checks);
    const long total = universe_size(static_cast<int>(opt.alphabet.size()), opt.max_len);
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(std::max(total, 1L))));

    std::vector<Worker> workers;
    workers.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) workers.push_back(Worker{opt, checks, total, jobs, {}});

    if (jobs == 1) {
        workers[0].run(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&, w] {
                try {
                    workers[static_cast<size_t>(w)].run(w);
                } catch (...) {
                    errors[static_cast<size_t>(w)] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    SweepReport rep;
    rep.alphabet = opt.alphabet;
    rep.max_len = opt.max_len;
    rep.ops = opt.ops;
    rep.checks = checks;
    for (const auto& w : workers) {
        rep.strings += w.out.strings;
        rep.pairs += w.out.pairs;
        for (const auto& [kind, st] : w.out.per_op) merge_stats(rep.per_op[kind], st);
        rep.violations.insert(rep.violations.end(), w.out.violations.begin(),
                              w.out.violations.end());
    }
    std::sort(rep.violations.begin(), rep.violations.end(), violation_less);
    return rep;
}

std::string SweepReport::to_json() const {
    nlohmann::json doc;
    doc["alphabet"] = latin1_to_utf8(alphabet);
    doc["max_len"] = max_len;
    nlohmann::json op_names = nlohmann::json::array();
    for (EditKind kind : ops) op_names.push_back(edit_kind_name(kind));
    doc["ops"] = op_names;
    doc["checks"] = checks;
    doc["strings"] = strings;
    doc["pairs"] = pairs;
    doc["ok"] = ok();
    nlohmann::json stats = nlohmann::json::object();
    for (const auto& [kind, st] : per_op) {
        nlohmann::json rec;
        rec["pairs"] = st.pairs;
        rec["bounded_pairs"] = st.bounded_pairs;
        if (st.max_delta == INT_MIN) {
            rec["max"] = nullptr;
        } else {
            rec["max"] = {{"delta", st.max_delta},
                          {"text", latin1_to_utf8(st.max_text)},
                          {"op", edit_op_name(st.max_op)}};
        }
        if (st.out_max_delta == INT_MIN) {
            rec["outside_max"] = nullptr;
        } else {
            rec["outside_max"] = {{"delta", st.out_max_delta},
                                  {"text", latin1_to_utf8(st.out_max_text)},
                                  {"op", edit_op_name(st.out_max_op)}};
        }
        stats[edit_kind_name(kind)] = rec;
    }
    doc["per_op"] = stats;
    nlohmann::json vios = nlohmann::json::array();
    for (const auto& v : violations) {
        vios.push_back({{"check", v.check_id},
                        {"text", latin1_to_utf8(v.text)},
                        {"op", edit_op_name(v.op)},
                        {"witness", latin1_to_utf8(v.witness)},
                        {"detail", v.detail},
                        {"repro", v.repro}});
    }
    doc["violations"] = vios;
    return doc.dump(2) + "\n";
}

std::string SweepReport::to_text() const {
    std::string out = "sweep over alphabet \"" + alphabet + "\", lengths 0.." +
                      std::to_string(max_len) + ": " + std::to_string(strings) + " strings, " +
                      std::to_string(pairs) + " edit pairs, " + std::to_string(violations.size()) +
                      " violations\n";
    for (const auto& [kind, st] : per_op) {
        out += "  " + std::string(edit_kind_name(kind)) + ": " + std::to_string(st.pairs) +
               " pairs, " + std::to_string(st.bounded_pairs) + " within bound preconditions";
        if (st.max_delta != INT_MIN)
            out += "; max delta " + signed_str(st.max_delta) + " on \"" + st.max_text + "\" (" +
                   edit_op_name(st.max_op) + ")";
        if (st.out_max_delta != INT_MIN)
            out += "; outside max " + signed_str(st.out_max_delta) + " on \"" + st.out_max_text +
                   "\" (" + edit_op_name(st.out_max_op) + ")";
        out += "\n";
    }
    for (const auto& v : violations)
        out += "  VIOLATION " + v.check_id + " text=\"" + v.text + "\" op=" + edit_op_name(v.op) +
               " witness=\"" + v.witness + "\" " + v.detail + "\n    repro: " + v.repro + "\n";
    return out;
}

} // namespace cdawg
