#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smlg {

using NodeId = std::uint32_t;

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Diagnostic {
    enum class Kind { DanglingEdgeEndpoint, DuplicateEdge, EmptyLabel, WhitespaceLabel };
    Kind kind;
    std::size_t index; // node or edge index the violation refers to
    std::string message;
};

// Immutable directed graph with one alphabet token per node. Tokens are
// whitespace-delimited UTF-8 strings, interned per graph. Construction never
// fails: invariant violations are collected as diagnostics so callers can
// inspect malformed values instead of losing them.
class LabeledGraph {
public:
    static constexpr std::uint32_t kNoToken = std::numeric_limits<std::uint32_t>::max();

    LabeledGraph() = default;
    LabeledGraph(std::vector<std::string> node_labels, std::vector<Edge> edges);

    std::size_t node_count() const { return node_label_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& label(NodeId v) const { return tokens_[node_label_[v]]; }
    std::uint32_t label_id(NodeId v) const { return node_label_[v]; }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const std::string> tokens() const { return tokens_; }

    // Interned id of a token, kNoToken if the graph never uses it.
    std::uint32_t token_id(std::string_view token) const;

    // Adjacency over in-range edges only (duplicates preserved).
    std::span<const NodeId> out_neighbors(NodeId v) const;
    std::span<const NodeId> in_neighbors(NodeId v) const;

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    bool valid() const { return diagnostics_.empty(); }

private:
    std::vector<std::string> tokens_;
    std::vector<std::uint32_t> node_label_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> out_offsets_, in_offsets_;
    std::vector<NodeId> out_targets_, in_sources_;
    std::vector<Diagnostic> diagnostics_;
};

// Incremental construction helper; ids are assigned densely in call order.
class GraphBuilder {
public:
    NodeId add_node(std::string label);
    void add_edge(NodeId src, NodeId dst);
    std::size_t node_count() const { return labels_.size(); }
    LabeledGraph build() &&;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

struct Pattern {
    std::vector<std::string> tokens;
    std::size_t length() const { return tokens.size(); }
    friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Every invariant violation with its node/edge index; empty iff the graph is
// valid. Identical to g.diagnostics(); kept as a free function for symmetry
// with the other analyses.
std::vector<Diagnostic> validate_graph(const LabeledGraph& g);

// True iff every node's out-neighbors carry pairwise distinct labels.
// Throws Error{Validation} on an invalid graph.
bool is_deterministic(const LabeledGraph& g);

// Max over nodes of in-degree + out-degree; 0 for the empty graph.
unsigned max_degree_sum(const LabeledGraph& g);

// Kahn topological sort succeeds, i.e. the graph has no directed cycle.
bool is_dag(const LabeledGraph& g);

} // namespace smlg
