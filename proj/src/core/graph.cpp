#include "core/graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "core/error.hpp"

namespace smlg {

namespace {

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

} // namespace

LabeledGraph::LabeledGraph(std::vector<std::string> node_labels, std::vector<Edge> edges)
    : edges_(std::move(edges)) {
    node_label_.reserve(node_labels.size());
    std::map<std::string, std::uint32_t, std::less<>> index;
    for (std::size_t i = 0; i < node_labels.size(); ++i) {
        std::string& tok = node_labels[i];
        if (tok.empty())
            diagnostics_.push_back({Diagnostic::Kind::EmptyLabel, i,
                                    "node " + std::to_string(i) + ": empty label"});
        else if (has_whitespace(tok))
            diagnostics_.push_back({Diagnostic::Kind::WhitespaceLabel, i,
                                    "node " + std::to_string(i) + ": label contains whitespace"});
        auto it = index.find(tok);
        if (it == index.end()) {
            it = index.emplace(tok, static_cast<std::uint32_t>(tokens_.size())).first;
            tokens_.push_back(std::move(tok));
        }
        node_label_.push_back(it->second);
    }

    const auto n = node_label_.size();
    std::vector<char> in_range(edges_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.src >= n || e.dst >= n)
            diagnostics_.push_back({Diagnostic::Kind::DanglingEdgeEndpoint, i,
                                    "edge " + std::to_string(i) + " (" + std::to_string(e.src) +
                                        "," + std::to_string(e.dst) + "): dangling edge endpoint"});
        else
            in_range[i] = 1;
    }
    {
        std::vector<std::pair<Edge, std::size_t>> seen;
        seen.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            seen.emplace_back(edges_[i], i);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 1; i < seen.size(); ++i)
            if (seen[i].first == seen[i - 1].first)
                diagnostics_.push_back({Diagnostic::Kind::DuplicateEdge, seen[i].second,
                                        "edge " + std::to_string(seen[i].second) + " (" +
                                            std::to_string(seen[i].first.src) + "," +
                                            std::to_string(seen[i].first.dst) +
                                            "): duplicate edge"});
        std::sort(diagnostics_.begin(), diagnostics_.end(),
                  [](const Diagnostic& a, const Diagnostic& b) { return a.index < b.index; });
    }

    // CSR adjacency over the in-range edges.
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!in_range[i])
            continue;
        ++out_offsets_[edges_[i].src + 1];
        ++in_offsets_[edges_[i].dst + 1];
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
    out_targets_.resize(out_offsets_.back());
    in_sources_.resize(in_offsets_.back());
    std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!in_range[i])
            continue;
        out_targets_[out_fill[edges_[i].src]++] = edges_[i].dst;
        in_sources_[in_fill[edges_[i].dst]++] = edges_[i].src;
    }
}

std::uint32_t LabeledGraph::token_id(std::string_view token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i] == token)
            return static_cast<std::uint32_t>(i);
    return kNoToken;
}

std::span<const NodeId> LabeledGraph::out_neighbors(NodeId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
}

std::span<const NodeId> LabeledGraph::in_neighbors(NodeId v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
}

NodeId GraphBuilder::add_node(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<NodeId>(labels_.size() - 1);
}

void GraphBuilder::add_edge(NodeId src, NodeId dst) { edges_.push_back({src, dst}); }

LabeledGraph GraphBuilder::build() && {
    return LabeledGraph(std::move(labels_), std::move(edges_));
}

std::vector<Diagnostic> validate_graph(const LabeledGraph& g) { return g.diagnostics(); }

bool is_deterministic(const LabeledGraph& g) {
    if (!g.valid())
        throw Error(ErrorCode::Validation, "is_deterministic: graph violates invariants");
    std::vector<std::uint32_t> labels;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto out = g.out_neighbors(v);
        labels.assign(out.size(), 0);
        std::transform(out.begin(), out.end(), labels.begin(),
                       [&](NodeId w) { return g.label_id(w); });
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            return false;
    }
    return true;
}

unsigned max_degree_sum(const LabeledGraph& g) {
    unsigned best = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        best = std::max(best, static_cast<unsigned>(g.out_neighbors(v).size() +
                                                    g.in_neighbors(v).size()));
    return best;
}

bool is_dag(const LabeledGraph& g) {
    const auto n = g.node_count();
    std::vector<std::uint32_t> indegree(n, 0);
    for (NodeId v = 0; v < n; ++v)
        indegree[v] = static_cast<std::uint32_t>(g.in_neighbors(v).size());
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (NodeId v = 0; v < n; ++v)
        if (indegree[v] == 0)
            queue.push_back(v);
    std::size_t processed = 0;
    while (processed < queue.size()) {
        NodeId v = queue[processed++];
        for (NodeId w : g.out_neighbors(v))
            if (--indegree[w] == 0)
                queue.push_back(w);
    }
    return processed == n;
}

} // namespace smlg
