#include "cdawg/exports.hpp"

#include <json.hpp>

namespace cdawg {

std::string latin1_to_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) {
        if (c < 0x80) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back(static_cast<char>(0xC0 | (c >> 6)));
            out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
        }
    }
    return out;
}

namespace {

std::string dot_escape(std::string_view s) {
    if (s.empty()) return "ε"; // ε
    std::string out;
    for (unsigned char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(static_cast<char>(c));
        } else if (c < 0x20 || c == 0x7f) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\\\x%02x", c);
            out += buf;
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

} // namespace

std::string export_dot(const Cdawg& g) {
    std::string out = "digraph cdawg {\n  rankdir=LR;\n";
    for (const auto& n : g.nodes) {
        out += "  n" + std::to_string(n.id) + " [label=\"" + dot_escape(n.long_label) + "\"";
        if (n.is_sink) out += " shape=doublecircle";
        out += "];\n";
    }
    for (const auto& e : g.edges) {
        out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
               dot_escape(g.label(e)) + "\"];\n";
    }
    out += "}\n";
    return out;
}

std::string export_json(const Cdawg& g) {
    nlohmann::json doc;
    doc["text"] = latin1_to_utf8(g.text.bytes);
    doc["n"] = g.text.size();
    doc["size_e"] = g.size_e;
    auto degrees = g.out_degrees();
    auto nodes = nlohmann::json::array();
    for (const auto& n : g.nodes) {
        nlohmann::json rec;
        rec["id"] = n.id;
        rec["long"] = latin1_to_utf8(n.long_label);
        rec["len"] = n.length;
        rec["out_degree"] = degrees[static_cast<size_t>(n.id)];
        nodes.push_back(std::move(rec));
    }
    doc["nodes"] = std::move(nodes);
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges) {
        nlohmann::json rec;
        rec["from"] = e.from;
        rec["label"] = latin1_to_utf8(g.label(e));
        rec["to"] = e.to;
        edges.push_back(std::move(rec));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace cdawg
