#pragma once

#include <cstdint>

namespace smlg {

// Case labels for the splitting-parameter analysis. The digits track the
// sub-case structure: first alpha (1: alpha != 1, 2: alpha == 1), then the
// delta/beta sub-cases.
enum class SplitCase {
    C1_1_1, // alpha != 1, delta != 1, beta < 1
    C1_1_2, // alpha != 1, delta < 1,  beta > 1
    C1_2,   // alpha != 1, delta < 1,  beta == 1
    C1_3,   // alpha != 1, delta == 1, beta < 1
    C2_1,   // alpha == 1, delta < 1
    C2_2,   // alpha == 1, delta >= 1, beta < 1
};

const char* to_string(SplitCase c);

// Parameters for covering an n x n instance with ceil(n/N) * ceil(n/M)
// subproblems of N x M vectors: the exponents eps/eps_prime certify that both
// terms of the combined running time stay subquadratic.
struct SplitPlan {
    SplitCase case_id = SplitCase::C2_1;
    double eps = 0.0;       // query-term exponent slack
    double eps_prime = 0.0; // index-term exponent slack
    double n_tilde = 1.0;   // real-valued group size for X
    double m_tilde = 1.0;   // real-valued group size for Y
    std::uint64_t n_cap = 1; // N = ceil(n_tilde)
    std::uint64_t m_cap = 1; // M = ceil(m_tilde)
};

struct PlanReport {
    double cond_a_exp = 0.0; // log_n(N^(alpha-1) * n), must be < 2
    double cond_b_exp = 0.0; // log_n(N^(delta-1) * M^(beta-1) * n^2), must be < 2
    bool cond_at_ok = false; // (alpha-1) ln N~ + ln n == (2-eps') ln n
    bool cond_bt_ok = false; // (delta-1) ln N~ + (beta-1) ln M~ + 2 ln n == (2-eps) ln n
    bool cond_c_ok = false;  // N == ceil(N~), M == ceil(M~)
    bool cond_d_ok = false;  // 1 <= N~ <= n and 1 <= M~ <= n
    double tol = 0.0;
    bool all_ok() const { return cond_at_ok && cond_bt_ok && cond_c_ok && cond_d_ok; }
};

// Deterministic plan construction. Requires alpha > 0, delta > 0, n >= 1 and
// the hypothesis delta < 1 or beta < 1; throws Error{Hypothesis} when both
// are >= 1 and Error{Argument} for the rest.
SplitPlan split_plan(double alpha, double delta, double beta, std::uint64_t n);

// Re-derives every condition from the plan fields; the two exact exponent
// equations are compared in natural-log space within tol (relative).
// Requires n >= 2.
PlanReport verify_plan(const SplitPlan& plan, std::uint64_t n, double alpha, double delta,
                       double beta, double tol);

} // namespace smlg
