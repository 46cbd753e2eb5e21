// Acceptance suite: certifies the constructive properties end to end and
// prints one PASS/FAIL line per criterion. Exit code 0 iff every gating
// criterion holds. Criterion 10 (timing slope) is produced always but is
// informative only: hardware noise must not fail the build.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "core/edit_distance.hpp"
#include "core/lic.hpp"
#include "core/matcher.hpp"
#include "core/ov.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"
#include "core/split_plan.hpp"

using namespace smlg;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& name, const std::string& detail,
            bool gating = true) {
    const char* verdict = pass ? "PASS" : (gating ? "FAIL" : "INFO");
    std::printf("[%2d] %s %s: %s\n", index, verdict, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass && gating)
        ++g_failures;
}

struct TrialParams {
    std::uint32_t n, m, d;
    bool plant;
    std::uint64_t seed;
};

TrialParams trial_params(std::uint64_t seed, int trial, std::uint32_t max_n,
                         std::uint32_t min_m, std::uint32_t max_m, std::uint32_t max_d) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(trial));
    SplitMix64 rng(s);
    TrialParams p;
    p.n = 1 + static_cast<std::uint32_t>(rng.next_below(max_n));
    p.m = min_m + static_cast<std::uint32_t>(rng.next_below(max_m - min_m + 1));
    p.d = 1 + static_cast<std::uint32_t>(rng.next_below(max_d));
    p.plant = trial % 2 == 0;
    p.seed = s;
    return p;
}

// criterion 1: online matcher, brute-force matcher, and vector oracle agree
// on 1000 cyclic reduction instances.
void criterion_reduction_correctness() {
    const auto begin = std::chrono::steady_clock::now();
    int agree = 0;
    const int trials = 1000;
    bool pattern_law = true;
    for (int t = 0; t < trials; ++t) {
        const auto p = trial_params(0xACC1, t, 8, 1, 8, 6);
        const auto inst = random_ov_instance(p.n, p.m, p.d, 0.5, p.plant, p.seed);
        const auto rg = assemble_graph(inst.x, p.d, Variant::Cyclic);
        const auto pattern = build_pattern(inst.y, p.d);
        pattern_law = pattern_law && pattern.length() == p.m * (p.d + 2) + 2;
        const bool ov = solve_ov_bruteforce(inst);
        const bool online = match_online(rg.graph, pattern);
        const bool brute =
            match_bruteforce(rg.graph, pattern,
                             {static_cast<std::uint32_t>(rg.graph.node_count()),
                              static_cast<std::uint32_t>(pattern.length())});
        if (online == brute && online == ov)
            ++agree;
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%d/%d trials agree, %.1fs", agree, trials,
                  secs.count());
    report(1, agree == trials && pattern_law && secs.count() < 30.0,
           "reduction correctness, cyclic, N,M in [1,8], d in [1,6]", detail);
}

// criterion 2: the cyclic construction stays correct when M > N.
void criterion_m_beyond_n() {
    int agree = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        const auto p = trial_params(0xACC2, t, 4, 5, 32, 6);
        const auto inst = random_ov_instance(p.n, p.m, p.d, 0.5, p.plant, p.seed);
        const auto rg = assemble_graph(inst.x, p.d, Variant::Cyclic);
        if (match_online(rg.graph, build_pattern(inst.y, p.d)) == solve_ov_bruteforce(inst))
            ++agree;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d/%d trials agree", agree, trials);
    report(2, agree == trials, "M > N regime, cyclic, N in [1,4], M in [5,32]", detail);
}

// criterion 3: acyclic correctness for M <= N, DAG shape, and the two
// recorded cycle edges on every cyclic build.
void criterion_acyclic_shape() {
    int agree = 0, dags = 0, cyclic_ok = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        auto p = trial_params(0xACC3, t, 8, 1, 8, 6);
        p.m = std::min(p.m, p.n);
        const auto inst = random_ov_instance(p.n, p.m, p.d, 0.5, p.plant, p.seed);
        const auto rg = assemble_graph(inst.x, p.d, Variant::Acyclic);
        if (match_online(rg.graph, build_pattern(inst.y, p.d)) == solve_ov_bruteforce(inst))
            ++agree;
        if (rg.back_edges.empty() && is_dag(rg.graph))
            ++dags;
        if (t % 10 == 0) {
            const auto cyc = assemble_graph(inst.x, p.d, Variant::Cyclic);
            if (cyc.back_edges.size() == 2 && !is_dag(cyc.graph))
                ++cyclic_ok;
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%d/%d agree, %d/%d DAG checks, %d/50 cyclic builds",
                  agree, trials, dags, trials, cyclic_ok);
    report(3, agree == trials && dags == trials && cyclic_ok == 50,
           "acyclic construction, M <= N; cyclic has exactly 2 back edges", detail);
}

// criterion 4: |P| law exact; |E| linear in d*N (least squares over the
// linear model {1, d, N, d*N}, which rejects any superlinear component).
void criterion_size_laws() {
    bool pattern_law = true;
    SplitMix64 rng(0xACC4);
    for (int t = 0; t < 200; ++t) {
        const auto m = 1 + static_cast<std::uint32_t>(rng.next_below(64));
        const auto d = 1 + static_cast<std::uint32_t>(rng.next_below(16));
        std::vector<BitVector> y;
        for (std::uint32_t i = 0; i < m; ++i) {
            BitVector v;
            v.bits.resize(d);
            for (auto& bit : v.bits)
                bit = static_cast<std::uint8_t>(rng.next_below(2));
            y.push_back(std::move(v));
        }
        pattern_law = pattern_law && build_pattern(y, d).length() == m * (d + 2) + 2;
    }

    // design matrix columns: 1, d, N, d*N
    std::array<std::array<double, 4>, 4> xtx{};
    std::array<double, 4> xty{};
    std::vector<std::pair<std::array<double, 4>, double>> rows;
    for (std::uint32_t n = 1; n <= 64; ++n)
        for (std::uint32_t d = 1; d <= 16; ++d) {
            const auto inst = random_ov_instance(n, 1, d, 0.5, false, derive_seed(4, n * 16 + d));
            const auto rg = assemble_graph(inst.x, d, Variant::Cyclic);
            const std::array<double, 4> x = {1.0, static_cast<double>(d),
                                             static_cast<double>(n),
                                             static_cast<double>(d) * n};
            const double y = static_cast<double>(rg.graph.edge_count());
            for (int i = 0; i < 4; ++i) {
                for (int j = 0; j < 4; ++j)
                    xtx[i][j] += x[i] * x[j];
                xty[i] += x[i] * y;
            }
            rows.emplace_back(x, y);
        }
    // solve the normal equations by Gaussian elimination
    std::array<double, 4> beta{};
    {
        std::array<std::array<double, 5>, 4> aug{};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j)
                aug[i][j] = xtx[i][j];
            aug[i][4] = xty[i];
        }
        for (int col = 0; col < 4; ++col) {
            int pivot = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs(aug[r][col]) > std::abs(aug[pivot][col]))
                    pivot = r;
            std::swap(aug[col], aug[pivot]);
            for (int r = 0; r < 4; ++r) {
                if (r == col)
                    continue;
                const double f = aug[r][col] / aug[col][col];
                for (int j = col; j < 5; ++j)
                    aug[r][j] -= f * aug[col][j];
            }
        }
        for (int i = 0; i < 4; ++i)
            beta[i] = aug[i][4] / aug[i][i];
    }
    double mean = 0.0;
    for (const auto& [x, y] : rows)
        mean += y;
    mean /= static_cast<double>(rows.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [x, y] : rows) {
        double fit = 0.0;
        for (int i = 0; i < 4; ++i)
            fit += beta[i] * x[i];
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - mean) * (y - mean);
    }
    const double r2 = 1.0 - ss_res / ss_tot;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "|P| law exact on 200 builds; |E| fit R^2 = %.6f (slope %.2f per d*N)", r2,
                  beta[3]);
    report(4, pattern_law && r2 >= 0.999, "size laws over N in {1..64}, d in {1..16}", detail);
}

// criterion 5: the full case grid verifies at tol 1e-9 with subquadratic
// margin min(eps, eps')/2 on both achieved exponents.
void criterion_split_grid() {
    const double alphas[] = {0.5, 1, 1.5, 2, 3};
    const double deltas[] = {0.25, 0.5, 1, 1.5};
    const double betas[] = {0.5, 1, 1.5, 2};
    const std::uint64_t ns[] = {100, 1000, 10000, 1000000};
    int points = 0, ok = 0, total = 0;
    for (double alpha : alphas)
        for (double delta : deltas)
            for (double beta : betas) {
                if (delta >= 1.0 && beta >= 1.0)
                    continue;
                ++points;
                for (std::uint64_t n : ns) {
                    ++total;
                    const auto plan = split_plan(alpha, delta, beta, n);
                    const auto rep = verify_plan(plan, n, alpha, delta, beta, 1e-9);
                    const double margin = std::min(plan.eps, plan.eps_prime) / 2.0;
                    if (rep.all_ok() && rep.cond_a_exp <= 2.0 - margin &&
                        rep.cond_b_exp <= 2.0 - margin && plan.eps > 0 && plan.eps_prime > 0)
                        ++ok;
                }
            }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%d/%d plans verified over %d parameter points", ok,
                  total, points);
    report(5, ok == total && points >= 40, "splitting-parameter grid, tol 1e-9", detail);
}

// criterion 6: the partition scheduler covers the instance exactly.
void criterion_partition() {
    int ok = 0;
    const int trials = 1000;
    SplitMix64 rng(0xACC6);
    for (int t = 0; t < trials; ++t) {
        const auto n = 1 + static_cast<std::uint32_t>(rng.next_below(16));
        const auto d = 1 + static_cast<std::uint32_t>(rng.next_below(6));
        const auto inst = random_ov_instance(n, n, d, 0.5, t % 2 == 0, rng.next());
        const auto gx = 1 + static_cast<std::uint32_t>(rng.next_below(n));
        const auto gy = 1 + static_cast<std::uint32_t>(rng.next_below(n));
        const auto result = partition_and_solve(
            inst, gx, gy, [](const OvInstance& sub) { return solve_ov_bruteforce(sub); });
        const std::uint64_t want =
            static_cast<std::uint64_t>((n + gx - 1) / gx) * ((n + gy - 1) / gy);
        if (result.answer == solve_ov_bruteforce(inst) && result.subproblems == want)
            ++ok;
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d/%d instances match, counts exact", ok, trials);
    report(6, ok == trials, "partition scheduler, n <= 16", detail);
}

// criterion 7: index transfer through the reduction and through the identity.
void criterion_transfer() {
    int ok = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const auto p = trial_params(0xACC7, t, 6, 1, 6, 5);
        const auto inst = random_ov_instance(p.n, p.m, p.d, 0.5, p.plant, p.seed);
        const auto scheme =
            transfer_index(ov_to_smlg_reduction(Variant::Cyclic, p.d), matcher_index_scheme());
        if (scheme.query(scheme.build(inst.x), inst.y) == solve_ov_bruteforce(inst))
            ++ok;
    }

    IndexScheme<OvSide, OvSide, bool, OvSide> base;
    base.build = [](const OvSide& x) { return x; };
    base.query = [](const OvSide& x, const OvSide& y) {
        OvInstance inst;
        inst.dim = x.empty() ? (y.empty() ? 0 : static_cast<std::uint32_t>(y[0].size()))
                             : static_cast<std::uint32_t>(x[0].size());
        inst.x = x;
        inst.y = y;
        return solve_ov_bruteforce(inst);
    };
    const auto moved = transfer_index(identity_reduction<OvSide, OvSide, bool>(), base);
    int identity_ok = 0;
    for (int t = 0; t < 100; ++t) {
        const auto p = trial_params(0xACC8, t, 6, 1, 6, 5);
        const auto inst = random_ov_instance(p.n, p.m, p.d, 0.5, p.plant, p.seed);
        if (moved.query(moved.build(inst.x), inst.y) ==
            base.query(base.build(inst.x), inst.y))
            ++identity_ok;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%d/%d via reduction, %d/100 identity transfers", ok,
                  trials, identity_ok);
    report(7, ok == trials && identity_ok == 100, "index transfer", detail);
}

// criterion 8: set-intersection queries against the direct test.
void criterion_sic() {
    SplitMix64 rng(0xACC9);
    int families = 0, ok = 0, total = 0;
    for (int f = 0; f < 200; ++f) {
        SetFamily family;
        family.universe = 1 + static_cast<std::uint32_t>(rng.next_below(12));
        const auto n = 1 + rng.next_below(10);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::vector<std::uint32_t> set;
            for (std::uint32_t v = 1; v <= family.universe; ++v)
                if (rng.next_below(3) == 0)
                    set.push_back(v);
            family.sets.push_back(std::move(set));
        }
        ++families;
        const auto g = build_sic_graph(family);
        for (std::uint32_t i = 1; i <= family.sets.size(); ++i)
            for (std::uint32_t j = 1; j <= family.sets.size(); ++j) {
                ++total;
                bool direct = false;
                for (auto a : family.sets[i - 1])
                    for (auto b : family.sets[j - 1])
                        direct = direct || a == b;
                if (sic_query(g, i, j) == direct)
                    ++ok;
            }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d/%d queries over %d families", ok, total, families);
    report(8, ok == total, "set-intersection graph queries", detail);
}

// criterion 9: exhaustive substring edit distance against the oracle.
void criterion_substring_ed() {
    std::vector<std::string> texts = {""};
    for (std::size_t len = 1, begin = 0; len <= 7; ++len) {
        const std::size_t end = texts.size();
        for (std::size_t i = begin; i < end; ++i) {
            texts.push_back(texts[i] + 'a');
            texts.push_back(texts[i] + 'b');
        }
        begin = end;
    }
    std::vector<std::string> patterns;
    for (const auto& t : texts)
        if (!t.empty() && t.size() <= 4)
            patterns.push_back(t);

    int ok = 0, total = 0;
    for (const auto& t : texts)
        for (const auto& p : patterns) {
            ++total;
            const auto fast = substring_edit_distance(t, p);
            const bool zero_iff_substring = (fast == 0) == (t.find(p) != std::string::npos);
            if (fast == substring_ed_bruteforce(t, p) && fast <= p.size() &&
                zero_iff_substring)
                ++ok;
        }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d/%d exhaustive pairs", ok, total);
    report(9, ok == total, "substring edit distance vs oracle", detail);
}

// criterion 10: log-log slope of matcher time against |E| * |P|. Produced
// always; the [0.8, 1.2] range check is informative because wall-clock noise
// is machine dependent.
void criterion_scaling() {
    struct Size {
        std::uint32_t n, d;
    };
    const Size sizes[] = {{2, 2}, {4, 4}, {8, 4}, {16, 8}, {32, 8}, {48, 12}, {64, 16}};
    std::vector<double> log_work, log_time;
    for (const auto size : sizes) {
        const auto inst =
            random_ov_instance(size.n, size.n, size.d, 0.5, true, derive_seed(10, size.n));
        const auto rg = assemble_graph(inst.x, size.d, Variant::Cyclic);
        const auto pattern = build_pattern(inst.y, size.d);
        volatile bool sink = match_online(rg.graph, pattern); // warm up
        std::vector<double> times;
        for (int rep = 0; rep < 7; ++rep) {
            const auto begin = std::chrono::steady_clock::now();
            sink = match_online(rg.graph, pattern);
            const auto end = std::chrono::steady_clock::now();
            times.push_back(
                std::chrono::duration<double, std::nano>(end - begin).count());
        }
        (void)sink;
        std::sort(times.begin(), times.end());
        const double median = times[times.size() / 2];
        const double work = static_cast<double>(rg.graph.edge_count()) *
                            static_cast<double>(pattern.length());
        log_work.push_back(std::log(work));
        log_time.push_back(std::log(median));
    }
    const auto size_count = static_cast<double>(log_work.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < log_work.size(); ++i) {
        mx += log_work[i];
        my += log_time[i];
    }
    mx /= size_count;
    my /= size_count;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < log_work.size(); ++i) {
        sxy += (log_work[i] - mx) * (log_time[i] - my);
        sxx += (log_work[i] - mx) * (log_work[i] - mx);
    }
    const double slope = sxy / sxx;
    const double span = (log_work.back() - log_work.front()) / std::log(10.0);
    const bool produced = std::isfinite(slope) && span >= 3.0;
    const bool in_range = slope >= 0.8 && slope <= 1.2;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "slope %.3f over %.1f decades of |E|*|P|%s", slope,
                  span, in_range ? "" : " (outside [0.8,1.2]; non-gating)");
    report(10, produced && in_range, "matcher scaling sanity", detail, /*gating=*/!produced);
}

} // namespace

int main() {
    criterion_reduction_correctness();
    criterion_m_beyond_n();
    criterion_acyclic_shape();
    criterion_size_laws();
    criterion_split_grid();
    criterion_partition();
    criterion_transfer();
    criterion_sic();
    criterion_substring_ed();
    criterion_scaling();
    if (g_failures == 0)
        std::printf("acceptance: all gating criteria passed\n");
    else
        std::printf("acceptance: %d gating criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
