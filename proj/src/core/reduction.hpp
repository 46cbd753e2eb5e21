#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/graph.hpp"
#include "core/ov.hpp"

namespace smlg {

// Reduction alphabet: entry marker, exit marker, and the two bit tokens.
inline constexpr const char* kTokenB = "B";
inline constexpr const char* kTokenE = "E";
inline constexpr const char* kTokenZero = "0";
inline constexpr const char* kTokenOne = "1";

enum class Variant { Acyclic, Cyclic };

// One gadget: a B-labeled entry, d layers of bit-labeled nodes (1 or 2 per
// layer, consecutive layers fully connected), an E-labeled exit. A traversal
// spells B t_1 ... t_d E with t_h drawn from layer h.
struct GadgetComponent {
    enum class Kind { W, Universal };
    Kind kind = Kind::Universal;
    NodeId entry = 0;
    NodeId exit = 0;
    std::vector<std::vector<NodeId>> layers;
};

// Output of assemble_graph: the graph plus enough structure to audit it.
struct ReductionGraph {
    LabeledGraph graph;
    NodeId start = 0; // node s, labeled B; the only source of B,B edges
    NodeId end = 0;   // node t, labeled E; the only target of E,E edges
    std::vector<GadgetComponent> top_chain;    // universal components u1_1..u1_K
    std::vector<GadgetComponent> w_components; // one per vector of X
    std::vector<GadgetComponent> bottom_chain; // universal components u2_1..u2_K
    std::vector<Edge> back_edges; // exactly 2 for Cyclic, empty for Acyclic
    Variant variant = Variant::Acyclic;
};

// P = B (B P_{y_1} E) (B P_{y_2} E) ... (B P_{y_M} E) E with P_{y}[h] = "1"
// iff y[h] = 1 else "0"; |P| = M (d + 2) + 2. Requires nonempty Y, vectors of
// length d.
Pattern build_pattern(std::span<const BitVector> y, std::uint32_t d);

// Standalone gadgets for inspection and testing; assemble_graph embeds the
// same constructions.
struct BuiltComponent {
    LabeledGraph graph;
    GadgetComponent component;
};

// Layer h offers token "1" iff x[h] = 0 and always offers "0", so the body
// admits P_y exactly when no position has x[h] = y[h] = 1, i.e. x . y = 0.
BuiltComponent build_w_component(const BitVector& x);

// Both tokens at every layer: admits P_y for every y in {0,1}^d.
BuiltComponent build_universal_component(std::uint32_t d);

// The full construction: start node s, end node t, top and bottom chains of
// K = max(1, 2N - 2) universal components, one W component per vector of X.
// Wiring: s -> every top entry and every W entry; top chain linked in order;
// last top exit -> every W entry; every W exit -> t and -> first bottom
// entry; bottom chain linked in order; every bottom exit -> t. The Cyclic
// variant loops the first top component and the last bottom component so
// patterns longer than the graph can wrap. Requires nonempty X, d >= 1.
ReductionGraph assemble_graph(std::span<const BitVector> x, std::uint32_t d, Variant variant);

// A family of subsets of [1..universe].
struct SetFamily {
    std::uint32_t universe = 0;
    std::vector<std::vector<std::uint32_t>> sets;
};

// DAG with one source per set (label "s<i>"), one node per universe element
// (label "A"), one sink per set (label "t<i>"); source_i -> element_v and
// element_v -> sink_i for each v in S^i. Requires >= 1 set and elements in
// [1..universe].
LabeledGraph build_sic_graph(const SetFamily& family);

// Runs the pattern "s<i>" "A" "t<j>" through match_online: true iff sets i
// and j share an element. Indices are 1-based; unknown indices are an error.
bool sic_query(const LabeledGraph& g, std::uint32_t i, std::uint32_t j);

} // namespace smlg
