#include <doctest.h>

#include <array>
#include <cmath>

#include "core/error.hpp"
#include "core/ov.hpp"
#include "test_util.hpp"

using namespace smlg;

TEST_CASE("solve_ov_bruteforce") {
    SUBCASE("orthogonal pair present") {
        OvInstance inst{2, {{{1, 0}}}, {{{0, 1}}}};
        CHECK(solve_ov_bruteforce(inst));
    }
    SUBCASE("no orthogonal pair") {
        OvInstance inst{2, {{{1, 1}}}, {{{1, 0}}, {{0, 1}}}};
        CHECK_FALSE(solve_ov_bruteforce(inst));
    }
    SUBCASE("empty side means false") {
        OvInstance inst{2, {}, {{{0, 1}}}};
        CHECK_FALSE(solve_ov_bruteforce(inst));
        CHECK_FALSE(solve_ov_bruteforce(OvInstance{3, {}, {}}));
    }
    SUBCASE("dimension mismatch is an error") {
        OvInstance inst{2, {{{1, 0, 1}}}, {{{0, 1}}}};
        CHECK_THROWS_AS(solve_ov_bruteforce(inst), Error);
    }
}

TEST_CASE("partition_and_solve covers the instance exactly") {
    SplitMix64 rng(0x9d5u);
    const auto brute = [](const OvInstance& sub) { return solve_ov_bruteforce(sub); };

    SUBCASE("subproblem counts follow the ceilings") {
        OvInstance inst = random_ov_instance(4, 4, 3, 0.5, false, 1);
        CHECK(partition_and_solve(inst, 2, 2, brute).subproblems == 4);
        inst = random_ov_instance(5, 5, 3, 0.5, false, 2);
        CHECK(partition_and_solve(inst, 2, 3, brute).subproblems == 6);
    }
    SUBCASE("bounds are enforced") {
        const OvInstance inst = random_ov_instance(4, 4, 3, 0.5, false, 3);
        CHECK_THROWS_AS(partition_and_solve(inst, 0, 2, brute), Error);
        CHECK_THROWS_AS(partition_and_solve(inst, 2, 5, brute), Error);
        const OvInstance uneven = random_ov_instance(4, 3, 3, 0.5, false, 4);
        CHECK_THROWS_AS(partition_and_solve(uneven, 2, 2, brute), Error);
    }
    SUBCASE("answer equals brute force for random group sizes") {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto n = 1 + static_cast<std::uint32_t>(rng.next_below(16));
            const auto d = 1 + static_cast<std::uint32_t>(rng.next_below(5));
            const auto inst =
                random_ov_instance(n, n, d, 0.5, trial % 2 == 0, rng.next());
            const auto gx = 1 + static_cast<std::uint32_t>(rng.next_below(n));
            const auto gy = 1 + static_cast<std::uint32_t>(rng.next_below(n));
            const auto result = partition_and_solve(inst, gx, gy, brute);
            CHECK(result.answer == solve_ov_bruteforce(inst));
            CHECK(result.subproblems ==
                  static_cast<std::uint64_t>((n + gx - 1) / gx) * ((n + gy - 1) / gy));
        }
    }
}

TEST_CASE("ceil_power_bound_check") {
    const std::array<std::uint64_t, 1> n100{100};
    CHECK(ceil_power_bound_check(0.5, 2.0, n100, 2.0));

    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= 1000000; n *= 10)
        ns.push_back(n);
    SUBCASE("b = 0 is trivially true") { CHECK(ceil_power_bound_check(1.7, 0.0, ns, 1.0)); }
    SUBCASE("b < 0 holds with C = 1 by ceiling monotonicity") {
        CHECK(ceil_power_bound_check(0.3, -1.0, ns, 1.0));
    }
    SUBCASE("b > 0, a >= 0 holds with C = 2^b") {
        SplitMix64 rng(0x11u);
        for (int trial = 0; trial < 200; ++trial) {
            const double a = 2.0 * rng.next_unit();
            const double b = 0.01 + 3.0 * rng.next_unit();
            CHECK(ceil_power_bound_check(a, b, ns, std::pow(2.0, b)));
        }
    }
    SUBCASE("the checker is honest about failures") {
        // ceil(n^a) = 1 for a < 0 while n^(ab) -> 0, so no constant works.
        CHECK_FALSE(ceil_power_bound_check(-1.0, 2.0, ns, 4.0));
    }
    SUBCASE("n below 2 is rejected") {
        const std::array<std::uint64_t, 1> bad{1};
        CHECK_THROWS_AS(ceil_power_bound_check(0.5, 2.0, bad, 1.0), Error);
    }
}

TEST_CASE("random instances are deterministic in the seed") {
    const auto a = random_ov_instance(5, 7, 9, 0.5, true, 42);
    const auto b = random_ov_instance(5, 7, 9, 0.5, true, 42);
    const auto c = random_ov_instance(5, 7, 9, 0.5, true, 43);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.x.size() == 5);
    CHECK(a.y.size() == 7);
    CHECK(a.dim == 9);
}

TEST_CASE("planted instances always contain an orthogonal pair") {
    SplitMix64 rng(0x77u);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_ov_instance(1 + rng.next_below(6), 1 + rng.next_below(6),
                                             1 + rng.next_below(8), 0.5, true, rng.next());
        CHECK(solve_ov_bruteforce(inst));
    }
}

TEST_CASE("density endpoints") {
    const auto ones = random_ov_instance(3, 3, 4, 1.0, false, 7);
    for (const auto& v : ones.x)
        for (auto bit : v.bits)
            CHECK(bit == 1);
    const auto zeros = random_ov_instance(3, 3, 4, 0.0, false, 7);
    CHECK(solve_ov_bruteforce(zeros));
    CHECK_THROWS_AS(random_ov_instance(2, 2, 2, 1.5, false, 7), Error);
}
