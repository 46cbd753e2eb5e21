#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace smlg {

struct BitVector {
    std::vector<std::uint8_t> bits; // entries are 0 or 1
    std::size_t size() const { return bits.size(); }
    friend bool operator==(const BitVector&, const BitVector&) = default;
};

bool dot_is_zero(const BitVector& a, const BitVector& b);

// Two sets of d-dimensional bit vectors; X is the indexed side, Y the query
// side. Either side may be empty (the existential is then false).
struct OvInstance {
    std::uint32_t dim = 0;
    std::vector<BitVector> x;
    std::vector<BitVector> y;
    friend bool operator==(const OvInstance&, const OvInstance&) = default;
};

// Throws Error{Argument} if some vector's length differs from inst.dim.
void check_ov_instance(const OvInstance& inst);

// True iff some pair (x, y) has zero dot product over the integers.
bool solve_ov_bruteforce(const OvInstance& inst);

struct PartitionResult {
    bool answer = false;
    std::uint64_t subproblems = 0;
};

using OvSubsolver = std::function<bool(const OvInstance&)>;

// Splits X into ceil(n/group_x) groups of at most group_x vectors and Y into
// ceil(n/group_y) groups, then ORs the subsolver over every group pair.
// Requires |X| == |Y| == n and 1 <= group_x, group_y <= n.
PartitionResult partition_and_solve(const OvInstance& inst, std::uint32_t group_x,
                                    std::uint32_t group_y, const OvSubsolver& subsolver);

// Checks ceil(n^a)^b <= C * n^(a*b) for every sampled n (all must be >= 2).
bool ceil_power_bound_check(double a, double b, std::span<const std::uint64_t> n_values,
                            double c);

// Each bit is 1 independently with probability one_probability. With
// plant_orthogonal_pair, one random (x, y) pair is forced orthogonal by
// clearing y wherever x is set, so positive instances stay represented at
// dimensions where random orthogonality is rare.
OvInstance random_ov_instance(std::uint32_t n, std::uint32_t m, std::uint32_t d,
                              double one_probability, bool plant_orthogonal_pair,
                              std::uint64_t seed);

} // namespace smlg
