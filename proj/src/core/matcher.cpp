#include "core/matcher.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace smlg {

namespace {

void require_valid(const LabeledGraph& g, const char* op) {
    if (!g.valid())
        throw Error(ErrorCode::Validation, std::string(op) + ": graph violates invariants");
}

void require_nonempty(const Pattern& p, const char* op) {
    if (p.tokens.empty())
        throw Error(ErrorCode::Argument, std::string(op) + ": empty pattern");
}

// Pattern tokens as label ids of g; tokens unknown to g get kNoToken and
// simply never match.
std::vector<std::uint32_t> pattern_label_ids(const LabeledGraph& g, const Pattern& p) {
    std::vector<std::uint32_t> ids(p.tokens.size());
    std::transform(p.tokens.begin(), p.tokens.end(), ids.begin(),
                   [&](const std::string& tok) { return g.token_id(tok); });
    return ids;
}

} // namespace

MatchStats match_online_stats(const LabeledGraph& g, const Pattern& p) {
    require_valid(g, "match_online");
    require_nonempty(p, "match_online");

    const auto want = pattern_label_ids(g, p);
    const auto n = g.node_count();

    MatchStats stats;
    std::vector<char> frontier(n, 0), next(n, 0);
    bool any = false;
    for (NodeId v = 0; v < n; ++v)
        if (g.label_id(v) == want[0])
            frontier[v] = any = true;

    for (std::size_t i = 1; i < want.size() && any; ++i) {
        std::fill(next.begin(), next.end(), 0);
        any = false;
        for (NodeId v = 0; v < n; ++v) {
            if (!frontier[v])
                continue;
            for (NodeId w : g.out_neighbors(v)) {
                ++stats.relaxations;
                if (g.label_id(w) == want[i])
                    next[w] = any = true;
            }
        }
        frontier.swap(next);
    }
    stats.matched = any;
    return stats;
}

bool match_online(const LabeledGraph& g, const Pattern& p) {
    return match_online_stats(g, p).matched;
}

bool match_bruteforce(const LabeledGraph& g, const Pattern& p, BruteForceCaps caps) {
    require_valid(g, "match_bruteforce");
    require_nonempty(p, "match_bruteforce");
    if (g.node_count() > caps.max_nodes || p.tokens.size() > caps.max_pattern)
        throw Error(ErrorCode::CapExceeded,
                    "match_bruteforce: instance exceeds the oracle cap (|V| <= " +
                        std::to_string(caps.max_nodes) +
                        ", |P| <= " + std::to_string(caps.max_pattern) + ")");

    const auto want = pattern_label_ids(g, p);
    const auto n = g.node_count();
    const auto len = want.size();

    enum : char { kUnknown = 0, kYes = 1, kNo = 2 };
    std::vector<char> memo(n * len, kUnknown);

    // Can a walk starting at v spell P[i..]?
    auto search = [&](auto&& self, NodeId v, std::size_t i) -> bool {
        if (g.label_id(v) != want[i])
            return false;
        if (i + 1 == len)
            return true;
        char& slot = memo[v * len + i];
        if (slot != kUnknown)
            return slot == kYes;
        slot = kNo;
        for (NodeId w : g.out_neighbors(v)) {
            if (self(self, w, i + 1)) {
                slot = kYes;
                break;
            }
        }
        return slot == kYes;
    };

    for (NodeId v = 0; v < n; ++v)
        if (search(search, v, 0))
            return true;
    return false;
}

std::optional<MatchWitness> find_match_path(const LabeledGraph& g, const Pattern& p) {
    require_valid(g, "find_match_path");
    require_nonempty(p, "find_match_path");

    const auto want = pattern_label_ids(g, p);
    const auto n = g.node_count();
    const auto len = want.size();

    // Keep every frontier so the witness can be walked back through in-edges.
    std::vector<std::vector<char>> frontiers(len, std::vector<char>(n, 0));
    bool any = false;
    for (NodeId v = 0; v < n; ++v)
        if (g.label_id(v) == want[0])
            frontiers[0][v] = any = true;
    for (std::size_t i = 1; i < len && any; ++i) {
        any = false;
        for (NodeId v = 0; v < n; ++v) {
            if (!frontiers[i - 1][v])
                continue;
            for (NodeId w : g.out_neighbors(v))
                if (g.label_id(w) == want[i])
                    frontiers[i][w] = any = true;
        }
    }
    if (!any)
        return std::nullopt;

    MatchWitness witness;
    witness.path.resize(len);
    NodeId cur = 0;
    for (NodeId v = 0; v < n; ++v)
        if (frontiers[len - 1][v]) {
            cur = v;
            break;
        }
    witness.path[len - 1] = cur;
    for (std::size_t i = len - 1; i > 0; --i) {
        for (NodeId u : g.in_neighbors(cur)) {
            if (frontiers[i - 1][u]) {
                cur = u;
                break;
            }
        }
        witness.path[i - 1] = cur;
    }
    return witness;
}

bool verify_witness(const LabeledGraph& g, const Pattern& p, const MatchWitness& w) {
    if (!g.valid() || w.path.size() != p.tokens.size() || w.path.empty())
        return false;
    for (std::size_t i = 0; i < w.path.size(); ++i) {
        if (w.path[i] >= g.node_count() || g.label(w.path[i]) != p.tokens[i])
            return false;
    }
    for (std::size_t i = 1; i < w.path.size(); ++i) {
        auto out = g.out_neighbors(w.path[i - 1]);
        if (std::find(out.begin(), out.end(), w.path[i]) == out.end())
            return false;
    }
    return true;
}

} // namespace smlg
