#pragma once

#include <string>
#include <string_view>

#include "core/graph.hpp"
#include "core/ov.hpp"
#include "core/reduction.hpp"

namespace smlg {

// Text formats (LF line endings, base-10 counts, whitespace-delimited
// tokens). Serialization is canonical: parse(serialize(x)) == x and identical
// values serialize to identical bytes.
//
//   graph:   "smlg-graph v1" / "nodes <count>" / per node "<id> <token>" in
//            id order / "edges <count>" / per edge "<src> <dst>"
//   pattern: "smlg-pattern v1" / one line of tokens
//   ov:      "ov v1" / "<N> <M> <d>" / N bit rows for X / M bit rows for Y
//   sets:    "sic v1" / "<n> <u>" / n lines of space-separated elements
//
// Parsers throw Error{Parse} with a 1-based line number for malformed
// headers, bad tokens, and out-of-range ids.

LabeledGraph parse_graph(std::string_view text);
std::string serialize_graph(const LabeledGraph& g);

Pattern parse_pattern(std::string_view text);
std::string serialize_pattern(const Pattern& p);

OvInstance parse_ov(std::string_view text);
std::string serialize_ov(const OvInstance& inst);

SetFamily parse_sets(std::string_view text);
std::string serialize_sets(const SetFamily& family);

} // namespace smlg
