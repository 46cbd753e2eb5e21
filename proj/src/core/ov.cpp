#include "core/ov.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/numeric.hpp"
#include "core/rng.hpp"

namespace smlg {

bool dot_is_zero(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::Argument, "dot product: dimension mismatch");
    for (std::size_t h = 0; h < a.size(); ++h)
        if (a.bits[h] != 0 && b.bits[h] != 0)
            return false;
    return true;
}

void check_ov_instance(const OvInstance& inst) {
    for (const auto& v : inst.x)
        if (v.size() != inst.dim)
            throw Error(ErrorCode::Argument, "ov instance: vector in X has wrong dimension");
    for (const auto& v : inst.y)
        if (v.size() != inst.dim)
            throw Error(ErrorCode::Argument, "ov instance: vector in Y has wrong dimension");
}

bool solve_ov_bruteforce(const OvInstance& inst) {
    check_ov_instance(inst);
    for (const auto& xv : inst.x)
        for (const auto& yv : inst.y)
            if (dot_is_zero(xv, yv))
                return true;
    return false;
}

PartitionResult partition_and_solve(const OvInstance& inst, std::uint32_t group_x,
                                    std::uint32_t group_y, const OvSubsolver& subsolver) {
    check_ov_instance(inst);
    if (inst.x.size() != inst.y.size())
        throw Error(ErrorCode::Argument, "partition_and_solve: |X| and |Y| must both equal n");
    const std::uint64_t n = inst.x.size();
    if (n == 0)
        throw Error(ErrorCode::Argument, "partition_and_solve: empty instance");
    if (group_x < 1 || group_x > n || group_y < 1 || group_y > n)
        throw Error(ErrorCode::Argument, "partition_and_solve: group sizes must lie in [1, n]");

    const std::uint64_t groups_x = (n + group_x - 1) / group_x;
    const std::uint64_t groups_y = (n + group_y - 1) / group_y;

    PartitionResult result;
    result.subproblems = groups_x * groups_y;
    for (std::uint64_t i = 0; i < groups_x; ++i) {
        for (std::uint64_t j = 0; j < groups_y; ++j) {
            OvInstance sub;
            sub.dim = inst.dim;
            const std::uint64_t xb = i * group_x, xe = std::min<std::uint64_t>(n, xb + group_x);
            const std::uint64_t yb = j * group_y, ye = std::min<std::uint64_t>(n, yb + group_y);
            sub.x.assign(inst.x.begin() + xb, inst.x.begin() + xe);
            sub.y.assign(inst.y.begin() + yb, inst.y.begin() + ye);
            if (subsolver(sub))
                result.answer = true;
        }
    }
    return result;
}

bool ceil_power_bound_check(double a, double b, std::span<const std::uint64_t> n_values,
                            double c) {
    for (std::uint64_t n : n_values) {
        if (n < 2)
            throw Error(ErrorCode::Argument, "ceil_power_bound_check: n must be >= 2");
        const double nd = static_cast<double>(n);
        const double lhs = std::pow(ceil_snapped(std::pow(nd, a)), b);
        const double rhs = c * std::pow(nd, a * b);
        if (!(lhs <= rhs))
            return false;
    }
    return true;
}

OvInstance random_ov_instance(std::uint32_t n, std::uint32_t m, std::uint32_t d,
                              double one_probability, bool plant_orthogonal_pair,
                              std::uint64_t seed) {
    if (one_probability < 0.0 || one_probability > 1.0)
        throw Error(ErrorCode::Argument, "random_ov_instance: probability outside [0, 1]");
    SplitMix64 rng(seed);
    OvInstance inst;
    inst.dim = d;
    inst.x.resize(n);
    inst.y.resize(m);
    for (auto& v : inst.x) {
        v.bits.resize(d);
        for (auto& bit : v.bits)
            bit = rng.next_bernoulli(one_probability) ? 1 : 0;
    }
    for (auto& v : inst.y) {
        v.bits.resize(d);
        for (auto& bit : v.bits)
            bit = rng.next_bernoulli(one_probability) ? 1 : 0;
    }
    if (plant_orthogonal_pair && n > 0 && m > 0) {
        const auto j = static_cast<std::size_t>(rng.next_below(n));
        const auto i = static_cast<std::size_t>(rng.next_below(m));
        for (std::uint32_t h = 0; h < d; ++h)
            if (inst.x[j].bits[h] != 0)
                inst.y[i].bits[h] = 0;
    }
    return inst;
}

} // namespace smlg
