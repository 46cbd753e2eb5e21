#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace smlg {

// A concrete path spelling the pattern: |path| == |P|, consecutive nodes
// joined by edges, labels matching position by position.
struct MatchWitness {
    std::vector<NodeId> path;
};

struct MatchStats {
    bool matched = false;
    std::uint64_t relaxations = 0; // (edge, position) pairs touched; <= |E| * |P|
};

// Frontier dynamic program: F_1 = nodes labeled P[1], F_{i+1} = out-neighbors
// of F_i labeled P[i+1], answer F_{|P|} nonempty. Handles cycles (nodes may
// repeat along the path). Throws Error{Argument} on an empty pattern and
// Error{Validation} on an invalid graph.
bool match_online(const LabeledGraph& g, const Pattern& p);
MatchStats match_online_stats(const LabeledGraph& g, const Pattern& p);

struct BruteForceCaps {
    std::uint32_t max_nodes = 64;
    std::uint32_t max_pattern = 32;
};

// Independent oracle: memoized depth-first search over all label-consistent
// walks. Refuses (Error{CapExceeded}) beyond the caps; it exists to
// cross-check match_online, not to be fast.
bool match_bruteforce(const LabeledGraph& g, const Pattern& p, BruteForceCaps caps = {});

// Witness extraction via the frontier program plus backtracking; returns a
// path iff match_online would return true.
std::optional<MatchWitness> find_match_path(const LabeledGraph& g, const Pattern& p);

// Pure check of the witness invariants; never throws on a valid graph.
bool verify_witness(const LabeledGraph& g, const Pattern& p, const MatchWitness& w);

} // namespace smlg
