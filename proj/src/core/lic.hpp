#pragma once

#include <functional>
#include <utility>

#include "core/matcher.hpp"
#include "core/reduction.hpp"

namespace smlg {

struct CostExponents {
    double alpha = 1.0; // indexing time |first|^alpha
    double delta = 1.0; // query time factor |first|^delta
    double beta = 1.0;  // query time factor |second|^beta
};

// Build/query pair: preprocess the first input into an opaque index, then
// answer any second input against it.
template <typename First, typename Second, typename Answer, typename Index>
struct IndexScheme {
    std::function<Index(const First&)> build;
    std::function<Answer(const Index&, const Second&)> query;
    CostExponents exponents{};
    unsigned parameter = 1; // k
};

// Reduction from problem A to problem B whose two input transformations are
// independent of each other: r_x maps the first input, r_y the second, s maps
// B's answer back. Each runs in linear time times k^O(1).
template <typename AFirst, typename ASecond, typename AAnswer, typename BFirst,
          typename BSecond, typename BAnswer>
struct LicReduction {
    std::function<BFirst(const AFirst&)> map_first;    // r_x
    std::function<BSecond(const ASecond&)> map_second; // r_y
    std::function<AAnswer(const BAnswer&)> map_answer; // s
    unsigned parameter = 1;                            // k
};

// An index for B becomes an index for A: build through r_x, query through r_y
// and s. Cost exponents carry over with A's parameter attached.
template <typename AFirst, typename ASecond, typename AAnswer, typename BFirst,
          typename BSecond, typename BAnswer, typename Index>
IndexScheme<AFirst, ASecond, AAnswer, Index>
transfer_index(const LicReduction<AFirst, ASecond, AAnswer, BFirst, BSecond, BAnswer>& red,
               const IndexScheme<BFirst, BSecond, BAnswer, Index>& scheme) {
    IndexScheme<AFirst, ASecond, AAnswer, Index> out;
    out.build = [map_first = red.map_first, build = scheme.build](const AFirst& ax) {
        return build(map_first(ax));
    };
    out.query = [map_second = red.map_second, map_answer = red.map_answer,
                 query = scheme.query](const Index& idx, const ASecond& ay) {
        return map_answer(query(idx, map_second(ay)));
    };
    out.exponents = scheme.exponents;
    out.parameter = red.parameter;
    return out;
}

template <typename First, typename Second, typename Answer>
LicReduction<First, Second, Answer, First, Second, Answer> identity_reduction() {
    return {
        [](const First& v) { return v; },
        [](const Second& v) { return v; },
        [](const Answer& v) { return v; },
        1,
    };
}

using OvSide = std::vector<BitVector>;
using OvToSmlgReduction = LicReduction<OvSide, OvSide, bool, LabeledGraph, Pattern, bool>;

// r_x builds the gadget graph from X alone, r_y the pattern from Y alone,
// s is the identity on booleans; parameter k = d.
inline OvToSmlgReduction ov_to_smlg_reduction(Variant variant, std::uint32_t d) {
    return {
        [variant, d](const OvSide& x) { return assemble_graph(x, d, variant).graph; },
        [d](const OvSide& y) { return build_pattern(y, d); },
        [](const bool& answer) { return answer; },
        d,
    };
}

// The online matcher packaged as an index scheme for the graph problem: the
// "index" is the graph itself, queries run the frontier program.
inline IndexScheme<LabeledGraph, Pattern, bool, LabeledGraph> matcher_index_scheme() {
    IndexScheme<LabeledGraph, Pattern, bool, LabeledGraph> scheme;
    scheme.build = [](const LabeledGraph& g) { return g; };
    scheme.query = [](const LabeledGraph& g, const Pattern& p) { return match_online(g, p); };
    scheme.exponents = {1.0, 1.0, 1.0};
    return scheme;
}

} // namespace smlg
