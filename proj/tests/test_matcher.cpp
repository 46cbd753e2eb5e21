#include <doctest.h>

#include "core/error.hpp"
#include "core/matcher.hpp"
#include "core/ov.hpp"
#include "core/reduction.hpp"
#include "test_util.hpp"

using namespace smlg;

namespace {

Pattern tokens(std::vector<std::string> toks) { return Pattern{std::move(toks)}; }

} // namespace

TEST_CASE("match_online on a path graph") {
    LabeledGraph g({"0", "1", "0"}, {{0, 1}, {1, 2}});
    CHECK(match_online(g, tokens({"1", "0"})));
    CHECK_FALSE(match_online(g, tokens({"1", "1"})));
    CHECK(match_online(g, tokens({"0", "1", "0"})));
}

TEST_CASE("match_online walks cycles") {
    LabeledGraph g({"0"}, {{0, 0}});
    CHECK(match_online(g, tokens({"0", "0", "0", "0"})));
}

TEST_CASE("match_online rejects an empty pattern") {
    LabeledGraph g({"0"}, {});
    CHECK_THROWS_AS(match_online(g, Pattern{}), Error);
}

TEST_CASE("tokens absent from the graph never match") {
    LabeledGraph g({"0", "1"}, {{0, 1}});
    CHECK_FALSE(match_online(g, tokens({"zebra"})));
}

TEST_CASE("match_bruteforce basics") {
    SUBCASE("no edges means no length-2 path") {
        LabeledGraph g({"0", "1"}, {});
        CHECK_FALSE(match_bruteforce(g, tokens({"0", "1"})));
    }
    SUBCASE("single node, single token") {
        LabeledGraph g({"0"}, {});
        CHECK(match_bruteforce(g, tokens({"0"})));
    }
    SUBCASE("caps are enforced") {
        LabeledGraph g({"0"}, {{0, 0}});
        Pattern long_pattern;
        long_pattern.tokens.assign(40, "0");
        CHECK_THROWS_AS(match_bruteforce(g, long_pattern), Error);
        CHECK(match_bruteforce(g, long_pattern, {64, 64}));
    }
}

TEST_CASE("witness extraction on the unique path") {
    LabeledGraph g({"0", "1", "0"}, {{0, 1}, {1, 2}});
    const auto witness = find_match_path(g, tokens({"0", "1", "0"}));
    REQUIRE(witness.has_value());
    CHECK(witness->path == std::vector<NodeId>{0, 1, 2});
    CHECK(verify_witness(g, tokens({"0", "1", "0"}), *witness));
    CHECK_FALSE(find_match_path(g, tokens({"1", "1"})).has_value());
}

TEST_CASE("witness on a reduction graph with a known orthogonal pair") {
    OvInstance inst;
    inst.dim = 2;
    inst.x = {{{1, 0}}};
    inst.y = {{{0, 1}}};
    const auto rg = assemble_graph(inst.x, inst.dim, Variant::Cyclic);
    const auto p = build_pattern(inst.y, inst.dim);
    const auto witness = find_match_path(rg.graph, p);
    REQUIRE(witness.has_value());
    CHECK(verify_witness(rg.graph, p, *witness));
}

TEST_CASE("verify_witness rejects corrupted paths") {
    LabeledGraph g({"0", "1", "0"}, {{0, 1}, {1, 2}});
    const Pattern p = tokens({"0", "1", "0"});
    CHECK_FALSE(verify_witness(g, p, MatchWitness{{0, 1}}));       // wrong length
    CHECK_FALSE(verify_witness(g, p, MatchWitness{{0, 2, 1}}));    // no edge, wrong labels
    CHECK_FALSE(verify_witness(g, p, MatchWitness{{0, 1, 7}}));    // out of range
    CHECK_FALSE(verify_witness(g, p, MatchWitness{}));             // empty
}

// Spec invariant: online matcher and brute-force oracle agree on random
// instances; witnesses exist iff the matcher accepts and always verify.
TEST_CASE("oracle equivalence and witness soundness") {
    SplitMix64 rng(0x5eedu);
    int matches = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto g = test::random_graph(rng, 12, 24);
        const auto p = test::random_pattern(rng, 8);
        const bool online = match_online(g, p);
        CHECK(online == match_bruteforce(g, p));
        const auto witness = find_match_path(g, p);
        CHECK(witness.has_value() == online);
        if (witness) {
            CHECK(verify_witness(g, p, *witness));
            ++matches;
        }
    }
    CHECK(matches > 100); // the generator must exercise both outcomes
}

TEST_CASE("relaxation count stays within |E| * |P|") {
    SplitMix64 rng(0xabcdu);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto g = test::random_graph(rng, 12, 24);
        const auto p = test::random_pattern(rng, 8);
        const auto stats = match_online_stats(g, p);
        CHECK(stats.relaxations <= g.edge_count() * p.length());
    }
}
