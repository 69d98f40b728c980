#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "cdawg/build.hpp"
#include "cdawg/churn.hpp"
#include "cdawg/exports.hpp"
#include "cdawg/families.hpp"
#include "cdawg/lemmas.hpp"
#include "cdawg/maximal.hpp"
#include "cdawg/pattern.hpp"
#include "cdawg/sweep.hpp"

namespace py = pybind11;
using namespace cdawg;

namespace {

BuildMode parse_mode(const std::string& mode) {
    if (mode == "fast") return BuildMode::fast;
    if (mode == "naive") return BuildMode::naive;
    if (mode == "checked") return BuildMode::checked;
    throw std::invalid_argument("mode must be fast, naive, or checked");
}

EditOp parse_op(const std::string& op, const std::string& ch) {
    EditOp out;
    out.kind = parse_edit_kind(op);
    if (out.kind == EditKind::remove) {
        if (!ch.empty()) throw std::invalid_argument("del takes no character");
    } else {
        if (ch.size() != 1) throw std::invalid_argument(op + " needs exactly one character");
        out.ch = ch[0];
    }
    return out;
}

FamilySpec parse_family(const std::string& kind, int m, int k) {
    return {parse_family_kind(kind), m, k};
}

py::list violations_list(const std::vector<LemmaViolation>& vs) {
    py::list out;
    for (const auto& v : vs) {
        py::dict d;
        d["check"] = v.lemma_id;
        d["text"] = v.text;
        d["op"] = edit_op_name(v.op);
        d["witness"] = v.witness;
        d["detail"] = v.detail;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "compact directed acyclic word graphs: construction, maximal repeats, "
              "left-end edit sensitivity, exhaustive verification, worst-case families, "
              "leftward construction churn";

    py::class_<Cdawg>(m, "Graph")
        .def_property_readonly("text", [](const Cdawg& g) { return g.text.bytes; })
        .def_readonly("size_e", &Cdawg::size_e)
        .def_property_readonly("nodes",
                               [](const Cdawg& g) {
                                   py::list out;
                                   for (const auto& n : g.nodes)
                                       out.append(py::make_tuple(n.id, n.long_label, n.length));
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const Cdawg& g) {
                                   py::list out;
                                   for (const auto& e : g.edges)
                                       out.append(py::make_tuple(e.from, std::string(g.label(e)),
                                                                 e.to));
                                   return out;
                               })
        .def("out_degrees", &Cdawg::out_degrees)
        .def("spell_ok", [](const Cdawg& g) { return spell_check(g); })
        .def("to_dot", [](const Cdawg& g) { return export_dot(g); })
        .def("to_json", [](const Cdawg& g) { return export_json(g); })
        .def("__repr__", [](const Cdawg& g) {
            return "<Graph text len " + std::to_string(g.text.bytes.size()) + ", " +
                   std::to_string(g.nodes.size()) + " nodes, e=" + std::to_string(g.size_e) + ">";
        });

    py::class_<DeltaReport>(m, "DeltaReport")
        .def_property_readonly("text", [](const DeltaReport& r) { return r.original.bytes; })
        .def_property_readonly("edited", [](const DeltaReport& r) { return r.edited.bytes; })
        .def_property_readonly("op", [](const DeltaReport& r) { return edit_op_name(r.op); })
        .def_readonly("e_before", &DeltaReport::e_before)
        .def_readonly("e_after", &DeltaReport::e_after)
        .def_readonly("delta", &DeltaReport::delta)
        .def_readonly("F", &DeltaReport::F)
        .def_readonly("G", &DeltaReport::G)
        .def_readonly("new_nodes", &DeltaReport::new_nodes)
        .def_readonly("degree_increased_nodes", &DeltaReport::degree_increased_nodes);

    py::class_<FamilyRow>(m, "FamilyRow")
        .def_property_readonly("kind",
                               [](const FamilyRow& r) { return family_kind_name(r.spec.kind); })
        .def_property_readonly("m", [](const FamilyRow& r) { return r.spec.m; })
        .def_property_readonly("k", [](const FamilyRow& r) { return r.spec.k; })
        .def_readonly("length", &FamilyRow::length)
        .def_readonly("e_before", &FamilyRow::e_before)
        .def_readonly("e_after", &FamilyRow::e_after)
        .def_readonly("delta", &FamilyRow::delta)
        .def_readonly("predicted_before", &FamilyRow::predicted_before)
        .def_readonly("predicted_after", &FamilyRow::predicted_after)
        .def_readonly("match", &FamilyRow::match);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("alphabet", &SweepReport::alphabet)
        .def_readonly("max_len", &SweepReport::max_len)
        .def_readonly("strings", &SweepReport::strings)
        .def_readonly("pairs", &SweepReport::pairs)
        .def_property_readonly("ok", [](const SweepReport& r) { return r.ok(); })
        .def_property_readonly("violations",
                               [](const SweepReport& r) {
                                   py::list out;
                                   for (const auto& v : r.violations) {
                                       py::dict d;
                                       d["check"] = v.check_id;
                                       d["text"] = v.text;
                                       d["op"] = edit_op_name(v.op);
                                       d["witness"] = v.witness;
                                       d["detail"] = v.detail;
                                       d["repro"] = v.repro;
                                       out.append(d);
                                   }
                                   return out;
                               })
        .def("to_text", &SweepReport::to_text)
        .def("to_json", &SweepReport::to_json);

    py::class_<ChurnStep>(m, "ChurnStep")
        .def_readonly("i", &ChurnStep::i)
        .def_readonly("suffix_len", &ChurnStep::suffix_len)
        .def_readonly("e", &ChurnStep::e)
        .def_readonly("added", &ChurnStep::added)
        .def_readonly("removed", &ChurnStep::removed)
        .def_readonly("nodes_added", &ChurnStep::nodes_added)
        .def_readonly("nodes_removed", &ChurnStep::nodes_removed);

    py::class_<ChurnReport>(m, "ChurnReport")
        .def_property_readonly("text", [](const ChurnReport& r) { return r.text.bytes; })
        .def_readonly("steps", &ChurnReport::steps)
        .def_readonly("total_churn", &ChurnReport::total_churn)
        .def("to_tsv", &ChurnReport::to_tsv)
        .def("to_json", &ChurnReport::to_json);

    py::class_<ChurnTransition>(m, "ChurnTransition")
        .def_readonly("k", &ChurnTransition::k)
        .def_readonly("i_b", &ChurnTransition::i_b)
        .def_readonly("delta_b", &ChurnTransition::delta_b)
        .def_readonly("delta_a", &ChurnTransition::delta_a);

    py::class_<ChurnQuadraticReport>(m, "ChurnQuadraticReport")
        .def_readonly("m", &ChurnQuadraticReport::m)
        .def_readonly("run", &ChurnQuadraticReport::run)
        .def_readonly("transitions", &ChurnQuadraticReport::transitions)
        .def_readonly("transition_churn", &ChurnQuadraticReport::transition_churn)
        .def_readonly("ok", &ChurnQuadraticReport::ok)
        .def_readonly("failures", &ChurnQuadraticReport::failures)
        .def("to_text", &ChurnQuadraticReport::to_text)
        .def("to_json", &ChurnQuadraticReport::to_json);

    m.def(
        "build",
        [](const std::string& text, const std::string& mode) {
            return build(Text{text}, parse_mode(mode));
        },
        py::arg("text"), py::arg("mode") = "fast",
        "construct the graph; mode checked cross-verifies against the reference builder");
    m.def(
        "size",
        [](const std::string& text, const std::string& mode) {
            return build(Text{text}, parse_mode(mode)).size_e;
        },
        py::arg("text"), py::arg("mode") = "fast", "e(T), the number of edges");
    m.def(
        "maximal_substrings",
        [](const std::string& text) { return maximal_set(Text{text}).strings(); },
        py::arg("text"), "the node set M: left- and right-maximal substrings");
    m.def(
        "maximal_repeats",
        [](const std::string& text) { return maximal_repeats(Text{text}); }, py::arg("text"));
    m.def(
        "out_degree",
        [](const std::string& x, const std::string& text) {
            return out_degree(x, Text{text});
        },
        py::arg("x"), py::arg("text"), "out-degree of the node with maximal substring x");
    m.def(
        "delta",
        [](const std::string& text, const std::string& op, const std::string& ch,
           const std::string& mode) {
            return delta(Text{text}, parse_op(op, ch), parse_mode(mode));
        },
        py::arg("text"), py::arg("op"), py::arg("ch") = "", py::arg("mode") = "fast",
        "apply one left-end edit (op: ins/del/sub) and report the size movement");
    m.def("lemma_ids", [] { return lemma_ids(); });
    m.def(
        "check_lemma",
        [](const std::string& id, const std::string& text, const std::string& op,
           const std::string& ch, const std::string& mode) {
            return violations_list(
                check_lemma(id, Text{text}, parse_op(op, ch), parse_mode(mode)));
        },
        py::arg("id"), py::arg("text"), py::arg("op"), py::arg("ch") = "",
        py::arg("mode") = "fast", "violated instances of one checked statement; empty is good");
    m.def(
        "sweep",
        [](const std::string& alphabet, int max_len, const std::vector<std::string>& ops,
           const std::vector<std::string>& checks, int jobs, bool verify) {
            SweepOptions opt;
            opt.alphabet = alphabet;
            opt.max_len = max_len;
            if (!ops.empty()) {
                opt.ops.clear();
                for (const auto& name : ops) opt.ops.push_back(parse_edit_kind(name));
            }
            if (!checks.empty()) opt.checks = checks;
            opt.jobs = jobs;
            opt.verify_with_naive = verify;
            opt.spell = verify;
            return sweep(opt);
        },
        py::arg("alphabet"), py::arg("max_len"),
        py::arg("ops") = std::vector<std::string>{}, py::arg("checks") = std::vector<std::string>{},
        py::arg("jobs") = 1, py::arg("verify") = false,
        "verify checks over every string up to max_len");
    m.def(
        "family_string",
        [](const std::string& kind, int m, int k) {
            return family_string(parse_family(kind, m, k)).bytes;
        },
        py::arg("kind"), py::arg("m"), py::arg("k") = 0);
    m.def(
        "predicted_sizes",
        [](const std::string& kind, int m, int k) { return predicted_sizes(parse_family(kind, m, k)); },
        py::arg("kind"), py::arg("m"), py::arg("k") = 0);
    m.def(
        "verify_family",
        [](const std::string& kind, int m, int k) { return verify_family(parse_family(kind, m, k)); },
        py::arg("kind"), py::arg("m"), py::arg("k") = 0);
    m.def(
        "leftward_run", [](const std::string& text) { return leftward_run(Text{text}); },
        py::arg("text"), "rebuild the graph for every suffix, longest last, measuring edge churn");
    m.def("churn_quadratic_check", &churn_quadratic_check, py::arg("m"));
    m.def("churn_growth_exponent", &churn_growth_exponent, py::arg("points"),
          "least-squares slope of log(churn) against log(m) over (m, churn) points");
    m.def("expand_repeats", &expand_repeats, py::arg("pattern"),
          "expand \"(ab)^4c(ab)^3\" style repeat syntax");
}
