#include "core/reduction.hpp"

#include <string>
#include <utility>

#include "core/error.hpp"
#include "core/matcher.hpp"

namespace smlg {

namespace {

// Entry, layers, exit, fully connected layer to layer. A W component carries
// the vector it encodes; a universal component gets an empty x and offers
// both tokens everywhere.
GadgetComponent append_component(GraphBuilder& builder, GadgetComponent::Kind kind,
                                 const BitVector& x, std::uint32_t d) {
    GadgetComponent comp;
    comp.kind = kind;
    comp.entry = builder.add_node(kTokenB);
    comp.layers.resize(d);
    for (std::uint32_t h = 0; h < d; ++h) {
        auto& layer = comp.layers[h];
        layer.push_back(builder.add_node(kTokenZero));
        const bool offer_one = kind == GadgetComponent::Kind::Universal || x.bits[h] == 0;
        if (offer_one)
            layer.push_back(builder.add_node(kTokenOne));
        const auto& prev = h == 0 ? std::vector<NodeId>{comp.entry} : comp.layers[h - 1];
        for (NodeId u : prev)
            for (NodeId v : layer)
                builder.add_edge(u, v);
    }
    comp.exit = builder.add_node(kTokenE);
    for (NodeId u : comp.layers.back())
        builder.add_edge(u, comp.exit);
    return comp;
}

} // namespace

Pattern build_pattern(std::span<const BitVector> y, std::uint32_t d) {
    if (y.empty())
        throw Error(ErrorCode::Argument, "build_pattern: Y must contain at least one vector");
    for (const auto& v : y)
        if (v.size() != d)
            throw Error(ErrorCode::Argument, "build_pattern: vector length differs from d");

    Pattern p;
    p.tokens.reserve(y.size() * (d + 2) + 2);
    p.tokens.emplace_back(kTokenB);
    for (const auto& v : y) {
        p.tokens.emplace_back(kTokenB);
        for (std::uint32_t h = 0; h < d; ++h)
            p.tokens.emplace_back(v.bits[h] != 0 ? kTokenOne : kTokenZero);
        p.tokens.emplace_back(kTokenE);
    }
    p.tokens.emplace_back(kTokenE);
    return p;
}

BuiltComponent build_w_component(const BitVector& x) {
    if (x.size() == 0)
        throw Error(ErrorCode::Argument, "build_w_component: d must be >= 1");
    GraphBuilder builder;
    auto comp = append_component(builder, GadgetComponent::Kind::W, x,
                                 static_cast<std::uint32_t>(x.size()));
    return {std::move(builder).build(), std::move(comp)};
}

BuiltComponent build_universal_component(std::uint32_t d) {
    if (d == 0)
        throw Error(ErrorCode::Argument, "build_universal_component: d must be >= 1");
    GraphBuilder builder;
    auto comp = append_component(builder, GadgetComponent::Kind::Universal, {}, d);
    return {std::move(builder).build(), std::move(comp)};
}

ReductionGraph assemble_graph(std::span<const BitVector> x, std::uint32_t d, Variant variant) {
    if (x.empty())
        throw Error(ErrorCode::Argument, "assemble_graph: X must contain at least one vector");
    if (d == 0)
        throw Error(ErrorCode::Argument, "assemble_graph: d must be >= 1");
    for (const auto& v : x)
        if (v.size() != d)
            throw Error(ErrorCode::Argument, "assemble_graph: vector length differs from d");

    const std::size_t n = x.size();
    const std::size_t chain_len = std::max<std::size_t>(1, 2 * n - 2);

    ReductionGraph rg;
    rg.variant = variant;

    GraphBuilder builder;
    rg.start = builder.add_node(kTokenB);
    rg.end = builder.add_node(kTokenE);

    rg.top_chain.reserve(chain_len);
    for (std::size_t k = 0; k < chain_len; ++k)
        rg.top_chain.push_back(append_component(builder, GadgetComponent::Kind::Universal, {}, d));
    rg.w_components.reserve(n);
    for (const auto& vec : x)
        rg.w_components.push_back(append_component(builder, GadgetComponent::Kind::W, vec, d));
    rg.bottom_chain.reserve(chain_len);
    for (std::size_t k = 0; k < chain_len; ++k)
        rg.bottom_chain.push_back(
            append_component(builder, GadgetComponent::Kind::Universal, {}, d));

    for (const auto& u1 : rg.top_chain)
        builder.add_edge(rg.start, u1.entry);
    for (std::size_t k = 0; k + 1 < chain_len; ++k)
        builder.add_edge(rg.top_chain[k].exit, rg.top_chain[k + 1].entry);
    for (const auto& w : rg.w_components) {
        builder.add_edge(rg.top_chain.back().exit, w.entry);
        builder.add_edge(rg.start, w.entry);
        builder.add_edge(w.exit, rg.end);
        builder.add_edge(w.exit, rg.bottom_chain.front().entry);
    }
    for (std::size_t k = 0; k + 1 < chain_len; ++k)
        builder.add_edge(rg.bottom_chain[k].exit, rg.bottom_chain[k + 1].entry);
    for (const auto& u2 : rg.bottom_chain)
        builder.add_edge(u2.exit, rg.end);

    if (variant == Variant::Cyclic) {
        // Loop the first top component and the last bottom component; a
        // pattern with more blocks than the chains hold wraps around these.
        const Edge top_back{rg.top_chain.front().exit, rg.top_chain.front().entry};
        const Edge bottom_back{rg.bottom_chain.back().exit, rg.bottom_chain.back().entry};
        builder.add_edge(top_back.src, top_back.dst);
        builder.add_edge(bottom_back.src, bottom_back.dst);
        rg.back_edges = {top_back, bottom_back};
    }

    rg.graph = std::move(builder).build();
    return rg;
}

LabeledGraph build_sic_graph(const SetFamily& family) {
    if (family.sets.empty())
        throw Error(ErrorCode::Argument, "build_sic_graph: family must contain at least one set");
    for (const auto& set : family.sets)
        for (std::uint32_t v : set)
            if (v < 1 || v > family.universe)
                throw Error(ErrorCode::Argument, "build_sic_graph: element " + std::to_string(v) +
                                                     " outside universe [1.." +
                                                     std::to_string(family.universe) + "]");

    const std::size_t n = family.sets.size();
    GraphBuilder builder;
    std::vector<NodeId> sources(n), elements(family.universe), sinks(n);
    for (std::size_t i = 0; i < n; ++i)
        sources[i] = builder.add_node("s" + std::to_string(i + 1));
    for (std::uint32_t v = 0; v < family.universe; ++v)
        elements[v] = builder.add_node("A");
    for (std::size_t i = 0; i < n; ++i)
        sinks[i] = builder.add_node("t" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t v : family.sets[i]) {
            builder.add_edge(sources[i], elements[v - 1]);
            builder.add_edge(elements[v - 1], sinks[i]);
        }
    }
    return std::move(builder).build();
}

bool sic_query(const LabeledGraph& g, std::uint32_t i, std::uint32_t j) {
    const std::string src = "s" + std::to_string(i);
    const std::string dst = "t" + std::to_string(j);
    if (i < 1 || g.token_id(src) == LabeledGraph::kNoToken)
        throw Error(ErrorCode::Argument, "sic_query: no set with index " + std::to_string(i));
    if (j < 1 || g.token_id(dst) == LabeledGraph::kNoToken)
        throw Error(ErrorCode::Argument, "sic_query: no set with index " + std::to_string(j));
    Pattern p;
    p.tokens = {src, "A", dst};
    return match_online(g, p);
}

} // namespace smlg
