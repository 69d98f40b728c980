#pragma once

#include <string>
#include <string_view>

#include "cdawg/graph.hpp"

namespace cdawg {

// Bytes as Latin-1 codepoints, so arbitrary inputs stay valid UTF-8 JSON.
std::string latin1_to_utf8(std::string_view bytes);

// Deterministic DOT document: one line per node in id order (labels show the
// node's maximal substring, "ε" for the empty one), one line per edge in
// (source, label) order.
std::string export_dot(const Cdawg& g);

// Canonical JSON document: sorted object keys, nodes in id order, edges in
// (from, label) order, 2-space indent, LF endings. Byte-identical for equal
// graphs. Text bytes are mapped to U+0000..U+00FF.
std::string export_json(const Cdawg& g);

} // namespace cdawg
