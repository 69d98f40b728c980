// command line frontend: build graphs, measure edit sensitivity, run
// exhaustive verification sweeps, family tables, leftward churn runs.
// exit 0 = success, 1 = verification failure, 2 = usage error.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdawg/build.hpp"
#include "cdawg/churn.hpp"
#include "cdawg/exports.hpp"
#include "cdawg/families.hpp"
#include "cdawg/lemmas.hpp"
#include "cdawg/maximal.hpp"
#include "cdawg/pattern.hpp"
#include "cdawg/sweep.hpp"

namespace {

using namespace cdawg;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;

struct InputFlags {
    std::optional<std::string> literal;
    std::optional<std::string> file;
    bool repeat = false;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    cmd->add_option("text", in.literal, "input string (literal)");
    cmd->add_option("--file", in.file, "read the input bytes from a file instead");
    cmd->add_flag("--repeat", in.repeat, "expand repeat syntax first, e.g. \"(ab)^4c(ab)^3\"");
}

Text resolve_input(const InputFlags& in) {
    if (in.literal.has_value() == in.file.has_value())
        throw std::invalid_argument("provide exactly one input: a literal argument or --file");
    std::string bytes;
    if (in.literal) {
        bytes = *in.literal;
    } else {
        std::ifstream f(*in.file, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open file: " + *in.file);
        std::ostringstream ss;
        ss << f.rdbuf();
        bytes = ss.str();
    }
    if (in.repeat) bytes = expand_repeats(bytes);
    return Text{bytes};
}

long max_oracle_n() {
    const char* env = std::getenv("CDAWG_MAX_N");
    if (!env || !*env) return 10000;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end || v < 1) throw std::invalid_argument("CDAWG_MAX_N must be a positive integer");
    return v;
}

void guard_oracle_length(const Text& t) {
    const long cap = max_oracle_n();
    if (static_cast<long>(t.bytes.size()) > cap)
        throw std::invalid_argument("input length " + std::to_string(t.bytes.size()) +
                                    " exceeds CDAWG_MAX_N=" + std::to_string(cap) +
                                    " for the quadratic-time reference builder");
}

// the reference builder runs when the user forces it or asks for cross-checks
BuildMode pick_mode(const Text& t, bool oracle, bool verify) {
    if (oracle || verify) guard_oracle_length(t);
    if (verify) return BuildMode::checked;
    return oracle ? BuildMode::naive : BuildMode::fast;
}

int check_spelling(const Cdawg& g) {
    if (spell_check(g)) return exit_ok;
    std::fprintf(stderr, "verification failed: graph does not spell the distinct substrings exactly once\n");
    return exit_verification;
}

std::string printable(std::string_view s) {
    return s.empty() ? std::string("ε") : std::string(s);
}

// ---- subcommand bodies ----

int run_build(const InputFlags& in, const std::string& format, bool oracle, bool verify) {
    const Text t = resolve_input(in);
    const Cdawg g = build(t, pick_mode(t, oracle, verify));
    if (verify && check_spelling(g)) return exit_verification;
    std::fputs((format == "json" ? export_json(g) : export_dot(g)).c_str(), stdout);
    return exit_ok;
}

int run_size(const InputFlags& in, bool oracle, bool verify) {
    const Text t = resolve_input(in);
    const Cdawg g = build(t, pick_mode(t, oracle, verify));
    if (verify && check_spelling(g)) return exit_verification;
    std::printf("%d\n", g.size_e);
    return exit_ok;
}

int run_repeats(const InputFlags& in) {
    const Text t = resolve_input(in);
    guard_oracle_length(t); // position-class refinement is quadratic
    const MaximalSet m = maximal_set(t);
    const std::vector<std::string> reps = maximal_repeats(t);
    std::printf("M (%zu):\n", m.members.size());
    for (const auto& entry : m.members) std::printf("  %s\n", printable(entry.str).c_str());
    std::printf("maximal repeats (%zu):\n", reps.size());
    for (const auto& r : reps) std::printf("  %s\n", printable(r).c_str());
    return exit_ok;
}

// expand "all"/validate requested check ids against one concrete edit kind
std::vector<std::string> delta_checks(const std::vector<std::string>& requested, EditKind kind) {
    std::vector<std::string> out;
    auto add = [&](const std::string& id) {
        for (const auto& have : out)
            if (have == id) return;
        out.push_back(id);
    };
    for (const auto& id : requested) {
        if (id == "all") {
            for (const auto& lemma : lemma_ids())
                if (lemma_edit_kind(lemma) == kind) add(lemma);
            add("bound");
            add("fg");
        } else if (id == "bound" || id == "fg") {
            add(id);
        } else {
            if (lemma_edit_kind(id) != kind) // throws first on unknown ids
                throw std::invalid_argument("check " + id + " does not apply to edit kind " +
                                            edit_kind_name(kind));
            add(id);
        }
    }
    return out;
}

struct CheckOutcome {
    std::string id;
    bool applies = true;
    std::vector<LemmaViolation> violations;
};

std::vector<CheckOutcome> run_pair_checks(const EditPair& pair, const std::vector<std::string>& ids) {
    std::vector<CheckOutcome> out;
    const DeltaReport rep = delta_from_graphs(pair.before, pair.after, pair.op);
    for (const auto& id : ids) {
        CheckOutcome oc;
        oc.id = id;
        if (id == "bound") {
            const SizeBound bound = size_bound(pair.original, pair.op, pair.before.size_e);
            oc.applies = bound.applies;
            if (bound.applies && rep.delta > bound.limit)
                oc.violations.push_back({id, pair.original.bytes, pair.op, pair.edited.bytes,
                                         "delta=" + std::to_string(rep.delta) + " exceeds " +
                                             std::to_string(bound.limit)});
        } else if (id == "fg") {
            if (rep.delta > rep.F + rep.G)
                oc.violations.push_back({id, pair.original.bytes, pair.op, pair.edited.bytes,
                                         "delta=" + std::to_string(rep.delta) + " > F+G=" +
                                             std::to_string(rep.F + rep.G)});
            const int g_limit = pair.op.kind == EditKind::remove ? 0 : 1;
            if (rep.G > g_limit)
                oc.violations.push_back({id, pair.original.bytes, pair.op, pair.edited.bytes,
                                         "G=" + std::to_string(rep.G) + " exceeds " +
                                             std::to_string(g_limit)});
        } else {
            oc.violations = check_lemma(id, pair);
        }
        out.push_back(std::move(oc));
    }
    return out;
}

int run_delta(const InputFlags& in, const std::string& op_name, const std::string& ch,
              const std::vector<std::string>& checks, const std::string& format, bool oracle,
              bool verify) {
    const Text t = resolve_input(in);
    EditOp op;
    op.kind = parse_edit_kind(op_name);
    if (op.kind != EditKind::remove) {
        if (ch.size() != 1)
            throw std::invalid_argument("--char needs exactly one character for " +
                                        std::string(edit_kind_name(op.kind)));
        op.ch = ch[0];
    } else if (!ch.empty()) {
        throw std::invalid_argument("--char does not apply to del");
    }
    const BuildMode mode = pick_mode(t, oracle, verify);
    const EditPair pair = make_edit_pair(t, op, mode);
    if (verify && (check_spelling(pair.before) || check_spelling(pair.after)))
        return exit_verification;
    const DeltaReport rep = delta_from_graphs(pair.before, pair.after, op);
    const std::vector<CheckOutcome> outcomes =
        run_pair_checks(pair, delta_checks(checks, op.kind));
    size_t violations = 0;
    for (const auto& oc : outcomes) violations += oc.violations.size();

    if (format == "json") {
        nlohmann::json doc;
        doc["text"] = latin1_to_utf8(rep.original.bytes);
        doc["edited"] = latin1_to_utf8(rep.edited.bytes);
        doc["op"] = edit_op_name(op);
        doc["e_before"] = rep.e_before;
        doc["e_after"] = rep.e_after;
        doc["delta"] = rep.delta;
        doc["F"] = rep.F;
        doc["G"] = rep.G;
        nlohmann::json nn = nlohmann::json::array();
        for (const auto& s : rep.new_nodes) nn.push_back(latin1_to_utf8(s));
        doc["new_nodes"] = nn;
        nlohmann::json di = nlohmann::json::array();
        for (const auto& s : rep.degree_increased_nodes) di.push_back(latin1_to_utf8(s));
        doc["degree_increased_nodes"] = di;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& oc : outcomes) {
            nlohmann::json rec;
            rec["id"] = oc.id;
            rec["applies"] = oc.applies;
            nlohmann::json vs = nlohmann::json::array();
            for (const auto& v : oc.violations)
                vs.push_back({{"witness", latin1_to_utf8(v.witness)}, {"detail", v.detail}});
            rec["violations"] = vs;
            cs.push_back(rec);
        }
        doc["checks"] = cs;
        std::fputs((doc.dump(2) + "\n").c_str(), stdout);
    } else {
        std::printf("text: %s\n", rep.original.bytes.c_str());
        std::printf("edited: %s\n", rep.edited.bytes.c_str());
        std::printf("op: %s\n", edit_op_name(op).c_str());
        std::printf("e: %d -> %d\n", rep.e_before, rep.e_after);
        std::printf("delta: %+d\n", rep.delta);
        std::printf("F: %d\nG: %d\n", rep.F, rep.G);
        std::printf("new nodes (%zu):", rep.new_nodes.size());
        for (const auto& s : rep.new_nodes) std::printf(" %s", printable(s).c_str());
        std::printf("\ndegree increases (%zu):", rep.degree_increased_nodes.size());
        for (const auto& s : rep.degree_increased_nodes) std::printf(" %s", printable(s).c_str());
        std::printf("\n");
        for (const auto& oc : outcomes) {
            if (!oc.applies) {
                std::printf("check %s: precondition not met, skipped\n", oc.id.c_str());
            } else if (oc.violations.empty()) {
                std::printf("check %s: ok\n", oc.id.c_str());
            } else {
                for (const auto& v : oc.violations)
                    std::printf("check %s: VIOLATED witness=\"%s\" %s\n", oc.id.c_str(),
                                printable(v.witness).c_str(), v.detail.c_str());
            }
        }
    }
    return violations ? exit_verification : exit_ok;
}

int run_sweep(const std::string& alphabet, int max_len, const std::vector<std::string>& op_names,
              const std::vector<std::string>& checks, int jobs, bool verify,
              const std::string& format) {
    SweepOptions opt;
    opt.alphabet = alphabet;
    opt.max_len = max_len;
    if (!op_names.empty()) {
        opt.ops.clear();
        for (const auto& name : op_names) opt.ops.push_back(parse_edit_kind(name));
    }
    if (!checks.empty()) opt.checks = checks;
    opt.jobs = jobs;
    opt.verify_with_naive = verify;
    opt.spell = verify;
    const SweepReport rep = sweep(opt);
    std::fputs((format == "json" ? rep.to_json() : rep.to_text()).c_str(), stdout);
    return rep.ok() ? exit_ok : exit_verification;
}

int run_family(const std::string& kind_name, int m, std::optional<int> k,
               const std::string& format) {
    const FamilyKind kind = parse_family_kind(kind_name);
    std::vector<FamilyRow> rows;
    if (kind == FamilyKind::online) {
        if (k) {
            rows.push_back(verify_family({kind, m, *k}));
        } else {
            for (int kk = 0; kk <= m; ++kk) rows.push_back(verify_family({kind, m, kk}));
        }
    } else {
        if (k) throw std::invalid_argument("--k applies to the online family only");
        rows.push_back(verify_family({kind, m, 0}));
    }
    std::fputs((format == "json" ? family_table_json(rows) : family_table_tsv(rows)).c_str(),
               stdout);
    for (const auto& r : rows)
        if (!r.match) return exit_verification;
    return exit_ok;
}

int run_churn(const InputFlags& in, std::optional<int> m, const std::string& format,
              const std::string& dot_dir) {
    ChurnCallback dumper;
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        dumper = [dot_dir](const ChurnStep& step, const Cdawg& g) {
            std::ofstream f(dot_dir + "/step_" + std::to_string(step.i) + ".dot",
                            std::ios::binary);
            f << export_dot(g);
        };
    }
    if (m) {
        if (in.literal || in.file)
            throw std::invalid_argument("give either --m or an input text, not both");
        ChurnQuadraticReport rep = churn_quadratic_check(*m);
        if (dumper) leftward_run(rep.run.text, dumper); // dumps only; rep already computed
        std::fputs((format == "json" ? rep.to_json() : rep.to_text()).c_str(), stdout);
        return rep.ok ? exit_ok : exit_verification;
    }
    const Text t = resolve_input(in);
    const ChurnReport rep = leftward_run(t, dumper);
    std::fputs((format == "json" ? rep.to_json() : rep.to_tsv()).c_str(), stdout);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compact directed acyclic word graphs: construction, left-end edit "
                 "sensitivity, exhaustive verification, worst-case families, leftward churn"};
    app.require_subcommand(1);

    // build
    InputFlags build_in;
    std::string build_format = "dot";
    bool build_oracle = false, build_verify = false;
    auto* cmd_build = app.add_subcommand("build", "construct the graph and print it");
    add_input_flags(cmd_build, build_in);
    cmd_build->add_option("--format", build_format, "dot or json (default dot)")
        ->check(CLI::IsMember({"dot", "json"}));
    cmd_build->add_flag("--oracle", build_oracle, "use the quadratic reference builder");
    cmd_build->add_flag("--verify", build_verify,
                        "build both ways, require equality, and spell-check");

    // size
    InputFlags size_in;
    bool size_oracle = false, size_verify = false;
    auto* cmd_size = app.add_subcommand("size", "print e(T), the number of edges");
    add_input_flags(cmd_size, size_in);
    cmd_size->add_flag("--oracle", size_oracle, "use the quadratic reference builder");
    cmd_size->add_flag("--verify", size_verify,
                       "build both ways, require equality, and spell-check");

    // repeats
    InputFlags repeats_in;
    auto* cmd_repeats = app.add_subcommand(
        "repeats", "print the node set M and the maximal repeats, one per line");
    add_input_flags(cmd_repeats, repeats_in);

    // delta
    InputFlags delta_in;
    std::string delta_op, delta_char, delta_format = "table";
    std::vector<std::string> delta_check_ids;
    bool delta_oracle = false, delta_verify = false;
    auto* cmd_delta = app.add_subcommand("delta", "measure one left-end edit");
    add_input_flags(cmd_delta, delta_in);
    cmd_delta->add_option("--op", delta_op, "ins, del, or sub")->required();
    cmd_delta->add_option("--char", delta_char, "character to insert/substitute");
    cmd_delta
        ->add_option("--check", delta_check_ids,
                     "check ids to run on the pair (bound, fg, L1..L8, new_nodes, "
                     "new_nodes_sub, new_branches_sub, all); repeatable")
        ->type_size(1)
        ->allow_extra_args(false);
    cmd_delta->add_option("--format", delta_format, "table or json (default table)")
        ->check(CLI::IsMember({"table", "json"}));
    cmd_delta->add_flag("--oracle", delta_oracle, "use the quadratic reference builder");
    cmd_delta->add_flag("--verify", delta_verify,
                        "build both ways, require equality, and spell-check");

    // sweep
    std::string sweep_alphabet;
    int sweep_max_len = 0;
    std::vector<std::string> sweep_ops, sweep_checks;
    int sweep_jobs = 1;
    bool sweep_verify = false;
    std::string sweep_format = "text";
    auto* cmd_sweep =
        app.add_subcommand("sweep", "verify checks over every string up to a length");
    cmd_sweep->add_option("--alphabet", sweep_alphabet, "alphabet characters, e.g. ab")
        ->required();
    cmd_sweep->add_option("--max-len", sweep_max_len, "maximum string length")->required();
    cmd_sweep->add_option("--op", sweep_ops, "edit kinds to apply (default: ins del sub)")
        ->type_size(1)
        ->allow_extra_args(false);
    cmd_sweep->add_option("--check", sweep_checks, "check ids (default: all)")
        ->type_size(1)
        ->allow_extra_args(false);
    cmd_sweep->add_option("--jobs", sweep_jobs, "worker threads (default 1)");
    cmd_sweep->add_flag("--verify", sweep_verify,
                        "also cross-check every graph against the reference builder and "
                        "spell-check it");
    cmd_sweep->add_option("--format", sweep_format, "text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    // family
    std::string family_kind, family_format = "tsv";
    int family_m = 0;
    std::optional<int> family_k;
    auto* cmd_family =
        app.add_subcommand("family", "worst-case family table with measured sizes");
    cmd_family->add_option("--kind", family_kind, "insertion, deletion, substitution, online")
        ->required();
    cmd_family->add_option("--m", family_m, "family parameter m")->required();
    cmd_family->add_option("--k", family_k, "online k (default: all 0..m)");
    cmd_family->add_option("--format", family_format, "tsv or json (default tsv)")
        ->check(CLI::IsMember({"tsv", "json"}));

    // churn
    InputFlags churn_in;
    std::optional<int> churn_m;
    std::string churn_format, churn_dot_dir;
    auto* cmd_churn = app.add_subcommand(
        "churn", "leftward online construction: per-step edge churn");
    add_input_flags(cmd_churn, churn_in);
    cmd_churn->add_option("--m", churn_m,
                          "run the quadratic worst-case family instance T_m instead");
    cmd_churn->add_option("--format", churn_format, "tsv/text or json")
        ->check(CLI::IsMember({"tsv", "text", "json"}));
    cmd_churn->add_option("--dot-dir", churn_dot_dir, "write one DOT file per step here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (cmd_build->parsed()) return run_build(build_in, build_format, build_oracle, build_verify);
        if (cmd_size->parsed()) return run_size(size_in, size_oracle, size_verify);
        if (cmd_repeats->parsed()) return run_repeats(repeats_in);
        if (cmd_delta->parsed())
            return run_delta(delta_in, delta_op, delta_char, delta_check_ids, delta_format,
                             delta_oracle, delta_verify);
        if (cmd_sweep->parsed())
            return run_sweep(sweep_alphabet, sweep_max_len, sweep_ops, sweep_checks, sweep_jobs,
                             sweep_verify, sweep_format);
        if (cmd_family->parsed()) return run_family(family_kind, family_m, family_k, family_format);
        if (cmd_churn->parsed()) return run_churn(churn_in, churn_m, churn_format, churn_dot_dir);
        std::fprintf(stderr, "no subcommand\n");
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "verification failed: %s\n", e.what());
        return exit_verification;
    }
}
