#include "core/split_plan.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace smlg {

const char* to_string(SplitCase c) {
    switch (c) {
    case SplitCase::C1_1_1: return "C1_1_1";
    case SplitCase::C1_1_2: return "C1_1_2";
    case SplitCase::C1_2: return "C1_2";
    case SplitCase::C1_3: return "C1_3";
    case SplitCase::C2_1: return "C2_1";
    case SplitCase::C2_2: return "C2_2";
    }
    return "?";
}

namespace {

double pow_n(std::uint64_t n, double exponent) {
    return std::pow(static_cast<double>(n), exponent);
}

// Group-size exponent g = (1 - eps') / (alpha - 1) for the alpha != 1 cases.
// Any g in (0, 1] keeps N~ = n^g inside [1, n]; halving the admissible range
// keeps eps' = 1 - g(alpha - 1) strictly positive, and the extra factor for
// delta > 1 keeps the query-exponent interval nonempty.
double choose_group_exponent(double alpha, double delta, double beta) {
    double g = 0.5 * std::min(1.0, 1.0 / std::abs(alpha - 1.0));
    if (delta > 1.0 && beta < 1.0)
        g = std::min(g, 0.5 * (1.0 - beta) / (delta - 1.0));
    return g;
}

} // namespace

SplitPlan split_plan(double alpha, double delta, double beta, std::uint64_t n) {
    if (!(alpha > 0.0) || !std::isfinite(alpha) || !(delta > 0.0) || !std::isfinite(delta) ||
        !std::isfinite(beta))
        throw Error(ErrorCode::Argument, "split_plan: alpha and delta must be positive reals");
    if (n < 1)
        throw Error(ErrorCode::Argument, "split_plan: n must be >= 1");
    if (delta >= 1.0 && beta >= 1.0)
        throw Error(ErrorCode::Hypothesis,
                    "split_plan: requires delta < 1 or beta < 1");

    SplitPlan plan;
    if (alpha == 1.0) {
        plan.eps_prime = 1.0;
        if (delta < 1.0) {
            plan.case_id = SplitCase::C2_1;
            plan.eps = (1.0 - delta) / 2.0;
            plan.n_tilde = pow_n(n, plan.eps / (1.0 - delta));
            plan.m_tilde = 1.0;
        } else {
            plan.case_id = SplitCase::C2_2;
            plan.eps = (1.0 - beta) / 2.0;
            plan.n_tilde = 1.0;
            plan.m_tilde = pow_n(n, plan.eps / (1.0 - beta));
        }
    } else {
        const double g = choose_group_exponent(alpha, delta, beta);
        plan.eps_prime = 1.0 - g * (alpha - 1.0);
        plan.n_tilde = pow_n(n, g);
        if (delta != 1.0 && beta != 1.0) {
            if (beta < 1.0) {
                plan.case_id = SplitCase::C1_1_1;
                const double lo = std::max(0.0, g * (1.0 - delta));
                const double hi = 1.0 - beta + g * (1.0 - delta);
                plan.eps = (lo + hi) / 2.0;
            } else {
                // beta > 1 forces delta < 1. Taking eps at the closed upper
                // end of its interval makes the M~ exponent exactly zero;
                // an interior eps would leave M~ barely above 1 and the
                // ceiling to 2 erases the subquadratic margin at small n.
                plan.case_id = SplitCase::C1_1_2;
                plan.eps = g * (1.0 - delta);
            }
            const double m_exp = (g * (1.0 - delta) - plan.eps) / (beta - 1.0);
            plan.m_tilde = pow_n(n, m_exp);
        } else if (beta == 1.0) {
            plan.case_id = SplitCase::C1_2;
            plan.eps = g * (1.0 - delta);
            plan.n_tilde = pow_n(n, plan.eps / (1.0 - delta));
            plan.m_tilde = 1.0; // beta = 1 leaves M~ free; pick the smallest
        } else {
            plan.case_id = SplitCase::C1_3;
            plan.eps = (1.0 - beta) / 2.0;
            plan.m_tilde = pow_n(n, plan.eps / (1.0 - beta));
        }
    }
    plan.n_cap = static_cast<std::uint64_t>(ceil_snapped(plan.n_tilde));
    plan.m_cap = static_cast<std::uint64_t>(ceil_snapped(plan.m_tilde));
    return plan;
}

PlanReport verify_plan(const SplitPlan& plan, std::uint64_t n, double alpha, double delta,
                       double beta, double tol) {
    if (n < 2)
        throw Error(ErrorCode::Argument, "verify_plan: n must be >= 2");
    if (!std::isfinite(plan.eps) || !std::isfinite(plan.eps_prime) ||
        !std::isfinite(plan.n_tilde) || !std::isfinite(plan.m_tilde))
        throw Error(ErrorCode::Argument, "verify_plan: plan fields must be finite");

    PlanReport report;
    report.tol = tol;
    const double ln_n = std::log(static_cast<double>(n));

    const auto close = [tol](double lhs, double rhs) {
        return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(rhs));
    };
    report.cond_at_ok =
        close((alpha - 1.0) * std::log(plan.n_tilde) + ln_n, (2.0 - plan.eps_prime) * ln_n);
    report.cond_bt_ok = close((delta - 1.0) * std::log(plan.n_tilde) +
                                  (beta - 1.0) * std::log(plan.m_tilde) + 2.0 * ln_n,
                              (2.0 - plan.eps) * ln_n);
    report.cond_c_ok =
        plan.n_cap == static_cast<std::uint64_t>(ceil_snapped(plan.n_tilde)) &&
        plan.m_cap == static_cast<std::uint64_t>(ceil_snapped(plan.m_tilde));
    report.cond_d_ok = 1.0 <= plan.n_tilde && plan.n_tilde <= static_cast<double>(n) &&
                       1.0 <= plan.m_tilde && plan.m_tilde <= static_cast<double>(n);

    const double log_n_cap = std::log(static_cast<double>(plan.n_cap)) / ln_n;
    const double log_m_cap = std::log(static_cast<double>(plan.m_cap)) / ln_n;
    report.cond_a_exp = (alpha - 1.0) * log_n_cap + 1.0;
    report.cond_b_exp = (delta - 1.0) * log_n_cap + (beta - 1.0) * log_m_cap + 2.0;
    return report;
}

} // namespace smlg
