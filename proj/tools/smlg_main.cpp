// smlg command line: instance generation, reduction builders, matching,
// verification trials, splitting-parameter plans, and benchmarks. All domain
// logic lives behind the C API in libsmlg; this file is orchestration only.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <smlg/smlg.h>

namespace {

using GraphPtr = std::unique_ptr<smlg_graph, decltype(&smlg_graph_free)>;
using PatternPtr = std::unique_ptr<smlg_pattern, decltype(&smlg_pattern_free)>;
using OvPtr = std::unique_ptr<smlg_ov, decltype(&smlg_ov_free)>;
using SetsPtr = std::unique_ptr<smlg_sets, decltype(&smlg_sets_free)>;
using StringPtr = std::unique_ptr<char, decltype(&smlg_string_free)>;

void check(smlg_status status, const std::string& what) {
    if (status != SMLG_OK)
        throw std::runtime_error(what + ": " + smlg_status_name(status) + ": " +
                                 smlg_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

GraphPtr load_graph(const std::string& path) {
    smlg_graph* g = nullptr;
    check(smlg_graph_parse(read_file(path).c_str(), &g), path);
    return {g, &smlg_graph_free};
}

PatternPtr load_pattern(const std::string& path) {
    smlg_pattern* p = nullptr;
    check(smlg_pattern_parse(read_file(path).c_str(), &p), path);
    return {p, &smlg_pattern_free};
}

OvPtr load_ov(const std::string& path) {
    smlg_ov* inst = nullptr;
    check(smlg_ov_parse(read_file(path).c_str(), &inst), path);
    return {inst, &smlg_ov_free};
}

SetsPtr load_sets(const std::string& path) {
    smlg_sets* family = nullptr;
    check(smlg_sets_parse(read_file(path).c_str(), &family), path);
    return {family, &smlg_sets_free};
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Same construction as the library's splitmix64, for deriving per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

unsigned worker_count(std::size_t jobs) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SMLG_LAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1)
            workers = static_cast<unsigned>(cap);
    }
    return static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

// Runs fn(index) for every index in [0, jobs) on a small pool; results must be
// deposited by index so parallelism never changes output bytes. The first
// exception thrown by any worker is rethrown after the pool drains.
template <typename Fn>
void parallel_for(std::size_t jobs, Fn&& fn) {
    const unsigned workers = worker_count(jobs);
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < jobs; i = next++)
                    fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

std::string plan_key_values(const smlg_split_plan& plan, const smlg_plan_report& report) {
    std::ostringstream out;
    out << "case=" << smlg_split_case_name(plan.case_id) << "\n"
        << "eps=" << fmt_double(plan.eps) << "\n"
        << "eps_prime=" << fmt_double(plan.eps_prime) << "\n"
        << "n_tilde=" << fmt_double(plan.n_tilde) << "\n"
        << "m_tilde=" << fmt_double(plan.m_tilde) << "\n"
        << "cap_n=" << plan.n_cap << "\n"
        << "cap_m=" << plan.m_cap << "\n"
        << "cond_a_exp=" << fmt_double(report.cond_a_exp) << "\n"
        << "cond_b_exp=" << fmt_double(report.cond_b_exp) << "\n"
        << "cond_at_ok=" << report.cond_at_ok << "\n"
        << "cond_bt_ok=" << report.cond_bt_ok << "\n"
        << "cond_c_ok=" << report.cond_c_ok << "\n"
        << "cond_d_ok=" << report.cond_d_ok << "\n"
        << "tol=" << fmt_double(report.tol) << "\n";
    return std::move(out).str();
}

const char* kPlanCsvHeader = "alpha,delta,beta,n,status,case,eps,eps_prime,n_tilde,m_tilde,"
                             "cap_n,cap_m,cond_a_exp,cond_b_exp,cond_at_ok,cond_bt_ok,"
                             "cond_c_ok,cond_d_ok";

std::string plan_csv_row(double alpha, double delta, double beta, std::uint64_t n,
                         const smlg_split_plan* plan, const smlg_plan_report* report) {
    std::ostringstream out;
    out << fmt_double(alpha) << ',' << fmt_double(delta) << ',' << fmt_double(beta) << ',' << n
        << ',';
    if (plan == nullptr) {
        out << "hypothesis-violation,,,,,,,,,,,,";
    } else {
        out << "ok," << smlg_split_case_name(plan->case_id) << ',' << fmt_double(plan->eps)
            << ',' << fmt_double(plan->eps_prime) << ',' << fmt_double(plan->n_tilde) << ','
            << fmt_double(plan->m_tilde) << ',' << plan->n_cap << ',' << plan->m_cap << ','
            << fmt_double(report->cond_a_exp) << ',' << fmt_double(report->cond_b_exp) << ','
            << report->cond_at_ok << ',' << report->cond_bt_ok << ',' << report->cond_c_ok
            << ',' << report->cond_d_ok;
    }
    return std::move(out).str();
}

struct VerifyOptions {
    int trials = 1000;
    unsigned max_n = 8, max_m = 8, max_d = 6;
    std::uint64_t seed = 1;
    std::string variant = "cyclic";
    double density = 0.5;
    std::string fail_out = "verify-failure.ov";
};

struct TrialOutcome {
    bool failed = false;
    std::string line;
    std::string instance_text;
    std::size_t v = 0, e = 0, p = 0;
};

int run_verify(const VerifyOptions& opt) {
    const smlg_variant variant =
        opt.variant == "acyclic" ? SMLG_VARIANT_ACYCLIC : SMLG_VARIANT_CYCLIC;
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(opt.trials));

    parallel_for(outcomes.size(), [&](std::size_t t) {
        TrialOutcome& out = outcomes[t];
        const std::uint64_t trial_seed = mix_seed(opt.seed, t);
        std::uint32_t n = 1 + static_cast<std::uint32_t>(trial_seed % opt.max_n);
        std::uint32_t m = 1 + static_cast<std::uint32_t>((trial_seed >> 20) % opt.max_m);
        if (variant == SMLG_VARIANT_ACYCLIC)
            m = std::min(m, n); // the acyclic construction only covers M <= N
        const std::uint32_t d = 1 + static_cast<std::uint32_t>((trial_seed >> 40) % opt.max_d);
        const bool plant = t % 2 == 0;

        smlg_ov* inst_raw = nullptr;
        check(smlg_ov_random(n, m, d, opt.density, plant ? 1 : 0, trial_seed, &inst_raw),
              "gen instance");
        OvPtr inst(inst_raw, &smlg_ov_free);

        smlg_graph* graph_raw = nullptr;
        check(smlg_reduction_graph(inst.get(), variant, &graph_raw, nullptr), "build graph");
        GraphPtr graph(graph_raw, &smlg_graph_free);
        smlg_pattern* pattern_raw = nullptr;
        check(smlg_reduction_pattern(inst.get(), &pattern_raw), "build pattern");
        PatternPtr pattern(pattern_raw, &smlg_pattern_free);

        out.v = smlg_graph_node_count(graph.get());
        out.e = smlg_graph_edge_count(graph.get());
        out.p = smlg_pattern_length(pattern.get());

        int online = 0, brute = 0, ov = 0;
        check(smlg_match_online(graph.get(), pattern.get(), &online), "match_online");
        check(smlg_match_bruteforce(graph.get(), pattern.get(),
                                    static_cast<std::uint32_t>(out.v),
                                    static_cast<std::uint32_t>(out.p), &brute),
              "match_bruteforce");
        check(smlg_ov_solve_bruteforce(inst.get(), &ov), "ov oracle");

        if (online != brute || online != ov) {
            out.failed = true;
            std::ostringstream line;
            line << "trial " << t << ": n=" << n << " m=" << m << " d=" << d
                 << " online=" << online << " brute=" << brute << " ov=" << ov;
            out.line = line.str();
            char* text = nullptr;
            check(smlg_ov_serialize(inst.get(), &text), "serialize failing instance");
            StringPtr guard(text, &smlg_string_free);
            out.instance_text = text;
        }
    });

    std::size_t failures = 0, v_max = 0, e_max = 0, p_max = 0;
    for (const auto& out : outcomes) {
        v_max = std::max(v_max, out.v);
        e_max = std::max(e_max, out.e);
        p_max = std::max(p_max, out.p);
        if (out.failed && failures++ == 0) {
            std::cerr << out.line << "\n";
            write_file(opt.fail_out, out.instance_text);
            std::cerr << "failing instance written to " << opt.fail_out << "\n";
        }
    }
    std::cout << "verify reduction: variant=" << opt.variant << " trials=" << opt.trials
              << " max_n=" << opt.max_n << " max_m=" << opt.max_m << " max_d=" << opt.max_d
              << " density=" << fmt_double(opt.density) << " seed=" << opt.seed
              << " rng=" << smlg_rng_name() << "\n";
    std::cout << "sizes: v_max=" << v_max << " e_max=" << e_max << " p_max=" << p_max << "\n";
    std::cout << "failures=" << failures << "\n";
    return failures == 0 ? 0 : 1;
}

struct BenchOptions {
    std::string sizes = "2:2:2,4:4:4,8:8:8,16:16:8,32:32:8";
    int reps = 5;
    std::uint64_t seed = 1;
    std::string variant = "cyclic";
    std::string out;
};

int run_bench(const BenchOptions& opt) {
    const smlg_variant variant =
        opt.variant == "acyclic" ? SMLG_VARIANT_ACYCLIC : SMLG_VARIANT_CYCLIC;
    std::ostringstream csv;
    csv << "n,m,d,variant,v,e,p,ns,answer,seed\n";

    std::stringstream sizes(opt.sizes);
    std::string item;
    std::size_t index = 0;
    while (std::getline(sizes, item, ',')) {
        unsigned n = 0, m = 0, d = 0;
        if (std::sscanf(item.c_str(), "%u:%u:%u", &n, &m, &d) != 3 || n == 0 || m == 0 || d == 0)
            throw std::runtime_error("bad size spec '" + item + "', expected n:m:d");
        const std::uint64_t seed = mix_seed(opt.seed, index++);

        smlg_ov* inst_raw = nullptr;
        check(smlg_ov_random(n, m, d, 0.5, 1, seed, &inst_raw), "gen instance");
        OvPtr inst(inst_raw, &smlg_ov_free);
        smlg_graph* graph_raw = nullptr;
        check(smlg_reduction_graph(inst.get(), variant, &graph_raw, nullptr), "build graph");
        GraphPtr graph(graph_raw, &smlg_graph_free);
        smlg_pattern* pattern_raw = nullptr;
        check(smlg_reduction_pattern(inst.get(), &pattern_raw), "build pattern");
        PatternPtr pattern(pattern_raw, &smlg_pattern_free);

        for (int rep = 0; rep < opt.reps; ++rep) {
            int matched = 0;
            const auto begin = std::chrono::steady_clock::now();
            check(smlg_match_online(graph.get(), pattern.get(), &matched), "match_online");
            const auto end = std::chrono::steady_clock::now();
            const auto ns =
                std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
            csv << n << ',' << m << ',' << d << ',' << opt.variant << ','
                << smlg_graph_node_count(graph.get()) << ','
                << smlg_graph_edge_count(graph.get()) << ','
                << smlg_pattern_length(pattern.get()) << ',' << ns << ',' << matched << ','
                << seed << "\n";
        }
    }
    write_output(opt.out, std::move(csv).str());
    return 0;
}

int run_split_grid(const std::string& out_path, double tol) {
    const double alphas[] = {0.5, 1, 1.5, 2, 3};
    const double deltas[] = {0.25, 0.5, 1, 1.5};
    const double betas[] = {0.5, 1, 1.5, 2};
    const std::uint64_t ns[] = {100, 1000, 10000, 1000000};

    std::ostringstream csv;
    csv << kPlanCsvHeader << "\n";
    for (double alpha : alphas)
        for (double delta : deltas)
            for (double beta : betas)
                for (std::uint64_t n : ns) {
                    smlg_split_plan plan;
                    const smlg_status status =
                        smlg_split_plan_compute(alpha, delta, beta, n, &plan);
                    if (status == SMLG_ERR_HYPOTHESIS) {
                        csv << plan_csv_row(alpha, delta, beta, n, nullptr, nullptr) << "\n";
                        continue;
                    }
                    check(status, "split_plan");
                    smlg_plan_report report;
                    check(smlg_split_plan_verify(&plan, n, alpha, delta, beta, tol, &report),
                          "verify_plan");
                    csv << plan_csv_row(alpha, delta, beta, n, &plan, &report) << "\n";
                }
    write_output(out_path, std::move(csv).str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"string matching in labeled graphs: matchers, reduction builders, "
                 "splitting plans, and verification harness"};
    app.require_subcommand(1);

    // gen-ov
    auto* gen = app.add_subcommand("gen-ov", "generate a random bit-vector instance");
    std::uint32_t gen_n = 4, gen_m = 4, gen_d = 4;
    double gen_density = 0.5;
    bool gen_plant = false;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vectors in X")->required();
    gen->add_option("--m", gen_m, "vectors in Y")->required();
    gen->add_option("--d", gen_d, "dimension")->required();
    gen->add_option("--density", gen_density, "probability of a 1 bit (default 0.5)");
    gen->add_flag("--plant", gen_plant, "force one orthogonal pair");
    gen->add_option("--seed", gen_seed, "deterministic seed")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build reduction artifacts");
    reduce->require_subcommand(1);
    auto* r_ov = reduce->add_subcommand("ov-to-smlg", "gadget graph from X, pattern from Y");
    std::string r_variant = "cyclic", r_input, r_graph_out, r_pattern_out;
    r_ov->add_option("--variant", r_variant, "acyclic|cyclic")
        ->check(CLI::IsMember({"acyclic", "cyclic"}));
    r_ov->add_option("--input", r_input, "ov file")->required();
    r_ov->add_option("--graph-out", r_graph_out, "graph output file")->required();
    r_ov->add_option("--pattern-out", r_pattern_out, "pattern output file")->required();
    auto* r_sic = reduce->add_subcommand("sic", "set-intersection graph from a set family");
    std::string sic_input, sic_graph_out;
    r_sic->add_option("--input", sic_input, "set-family file")->required();
    r_sic->add_option("--graph-out", sic_graph_out, "graph output file")->required();

    // match
    auto* match = app.add_subcommand("match", "does any path spell the pattern?");
    std::string match_graph, match_pattern;
    bool match_witness = false;
    match->add_option("--graph", match_graph, "graph file")->required();
    match->add_option("--pattern", match_pattern, "pattern file")->required();
    match->add_flag("--witness", match_witness, "print a matching path");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "cross-check matcher against oracles on random reduction instances");
    VerifyOptions vopt;
    verify->add_option("--trials", vopt.trials, "number of trials");
    verify->add_option("--max-n", vopt.max_n, "max |X|");
    verify->add_option("--max-m", vopt.max_m, "max |Y|");
    verify->add_option("--max-d", vopt.max_d, "max dimension");
    verify->add_option("--seed", vopt.seed, "deterministic seed");
    verify->add_option("--variant", vopt.variant, "acyclic|cyclic")
        ->check(CLI::IsMember({"acyclic", "cyclic"}));
    verify->add_option("--density", vopt.density, "probability of a 1 bit");
    verify->add_option("--fail-out", vopt.fail_out, "file for a failing instance");

    // split-plan
    auto* plan_cmd = app.add_subcommand("split-plan", "splitting parameters for one point");
    double sp_alpha = 1, sp_delta = 0.5, sp_beta = 1, sp_tol = 1e-9;
    std::uint64_t sp_n = 1000000;
    plan_cmd->add_option("--alpha", sp_alpha, "indexing exponent")->required();
    plan_cmd->add_option("--delta", sp_delta, "query exponent on |first|")->required();
    plan_cmd->add_option("--beta", sp_beta, "query exponent on |second|")->required();
    plan_cmd->add_option("--n", sp_n, "instance size")->required();
    plan_cmd->add_option("--tol", sp_tol, "log-space tolerance (default 1e-9)");

    // split-grid
    auto* grid_cmd = app.add_subcommand("split-grid", "plans over the default case grid");
    std::string grid_out;
    double grid_tol = 1e-9;
    grid_cmd->add_option("--out", grid_out, "CSV output file (default stdout)");
    grid_cmd->add_option("--tol", grid_tol, "log-space tolerance");

    // bench
    auto* bench = app.add_subcommand("bench", "time the online matcher on reduction instances");
    BenchOptions bopt;
    bench->add_option("--sizes", bopt.sizes, "comma-separated n:m:d triples");
    bench->add_option("--reps", bopt.reps, "repetitions per size");
    bench->add_option("--seed", bopt.seed, "deterministic seed");
    bench->add_option("--variant", bopt.variant, "acyclic|cyclic")
        ->check(CLI::IsMember({"acyclic", "cyclic"}));
    bench->add_option("--out", bopt.out, "CSV output file (default stdout)");

    // subed
    auto* subed = app.add_subcommand("subed", "min edit distance to any substring of the text");
    std::string subed_text, subed_pattern;
    subed->add_option("--text", subed_text, "text file")->required();
    subed->add_option("--pattern", subed_pattern, "pattern file")->required();

    // sic-query
    auto* sicq = app.add_subcommand("sic-query", "do two sets intersect, via graph matching");
    std::string sicq_input;
    std::uint32_t sicq_i = 1, sicq_j = 1;
    sicq->add_option("--input", sicq_input, "set-family file")->required();
    sicq->add_option("--i", sicq_i, "first set index (1-based)")->required();
    sicq->add_option("--j", sicq_j, "second set index (1-based)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            smlg_ov* inst_raw = nullptr;
            check(smlg_ov_random(gen_n, gen_m, gen_d, gen_density, gen_plant ? 1 : 0, gen_seed,
                                 &inst_raw),
                  "gen-ov");
            OvPtr inst(inst_raw, &smlg_ov_free);
            char* text = nullptr;
            check(smlg_ov_serialize(inst.get(), &text), "serialize");
            StringPtr guard(text, &smlg_string_free);
            write_output(gen_out, text);
            return 0;
        }
        if (r_ov->parsed()) {
            auto inst = load_ov(r_input);
            const smlg_variant variant =
                r_variant == "acyclic" ? SMLG_VARIANT_ACYCLIC : SMLG_VARIANT_CYCLIC;
            smlg_graph* graph_raw = nullptr;
            smlg_reduction_info info;
            check(smlg_reduction_graph(inst.get(), variant, &graph_raw, &info), "build graph");
            GraphPtr graph(graph_raw, &smlg_graph_free);
            smlg_pattern* pattern_raw = nullptr;
            check(smlg_reduction_pattern(inst.get(), &pattern_raw), "build pattern");
            PatternPtr pattern(pattern_raw, &smlg_pattern_free);

            char* text = nullptr;
            check(smlg_graph_serialize(graph.get(), &text), "serialize graph");
            StringPtr gtext(text, &smlg_string_free);
            write_file(r_graph_out, gtext.get());
            check(smlg_pattern_serialize(pattern.get(), &text), "serialize pattern");
            StringPtr ptext(text, &smlg_string_free);
            write_file(r_pattern_out, ptext.get());
            std::cout << "variant=" << r_variant << " v=" << smlg_graph_node_count(graph.get())
                      << " e=" << smlg_graph_edge_count(graph.get())
                      << " p=" << smlg_pattern_length(pattern.get())
                      << " back_edges=" << info.back_edge_count << "\n";
            return 0;
        }
        if (r_sic->parsed()) {
            auto family = load_sets(sic_input);
            smlg_graph* graph_raw = nullptr;
            check(smlg_sic_graph(family.get(), &graph_raw), "build sic graph");
            GraphPtr graph(graph_raw, &smlg_graph_free);
            char* text = nullptr;
            check(smlg_graph_serialize(graph.get(), &text), "serialize graph");
            StringPtr gtext(text, &smlg_string_free);
            write_file(sic_graph_out, gtext.get());
            std::cout << "v=" << smlg_graph_node_count(graph.get())
                      << " e=" << smlg_graph_edge_count(graph.get()) << "\n";
            return 0;
        }
        if (match->parsed()) {
            auto graph = load_graph(match_graph);
            auto pattern = load_pattern(match_pattern);
            if (match_witness) {
                uint32_t* path = nullptr;
                size_t length = 0;
                check(smlg_find_match_path(graph.get(), pattern.get(), &path, &length),
                      "find_match_path");
                std::unique_ptr<uint32_t, decltype(&smlg_path_free)> guard(path, &smlg_path_free);
                if (path == nullptr) {
                    std::cout << "false\n";
                    return 1;
                }
                std::cout << "true\n";
                for (size_t i = 0; i < length; ++i)
                    std::cout << (i == 0 ? "" : " ") << path[i];
                std::cout << "\n";
                return 0;
            }
            int matched = 0;
            check(smlg_match_online(graph.get(), pattern.get(), &matched), "match");
            std::cout << (matched ? "true" : "false") << "\n";
            return matched ? 0 : 1;
        }
        if (verify->parsed())
            return run_verify(vopt);
        if (plan_cmd->parsed()) {
            smlg_split_plan plan;
            check(smlg_split_plan_compute(sp_alpha, sp_delta, sp_beta, sp_n, &plan),
                  "split-plan");
            smlg_plan_report report;
            check(smlg_split_plan_verify(&plan, sp_n, sp_alpha, sp_delta, sp_beta, sp_tol,
                                         &report),
                  "verify-plan");
            std::cout << plan_key_values(plan, report);
            std::cout << kPlanCsvHeader << "\n"
                      << plan_csv_row(sp_alpha, sp_delta, sp_beta, sp_n, &plan, &report) << "\n";
            return 0;
        }
        if (grid_cmd->parsed())
            return run_split_grid(grid_out, grid_tol);
        if (bench->parsed())
            return run_bench(bopt);
        if (subed->parsed()) {
            std::string text = read_file(subed_text);
            std::string pattern = read_file(subed_pattern);
            // a single trailing newline is file formatting, not payload
            if (!text.empty() && text.back() == '\n')
                text.pop_back();
            if (!pattern.empty() && pattern.back() == '\n')
                pattern.pop_back();
            uint64_t distance = 0;
            check(smlg_substring_edit_distance(text.c_str(), pattern.c_str(), &distance),
                  "subed");
            std::cout << distance << "\n";
            return 0;
        }
        if (sicq->parsed()) {
            auto family = load_sets(sicq_input);
            smlg_graph* graph_raw = nullptr;
            check(smlg_sic_graph(family.get(), &graph_raw), "build sic graph");
            GraphPtr graph(graph_raw, &smlg_graph_free);
            int intersects = 0;
            check(smlg_sic_query(graph.get(), sicq_i, sicq_j, &intersects), "sic-query");
            std::cout << (intersects ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
