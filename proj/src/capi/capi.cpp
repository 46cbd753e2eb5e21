#include "smlg/smlg.h"

#include <cstring>
#include <new>
#include <string>

#include "core/edit_distance.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/matcher.hpp"
#include "core/ov.hpp"
#include "core/reduction.hpp"
#include "core/rng.hpp"
#include "core/split_plan.hpp"
#include "core/text_io.hpp"

struct smlg_graph {
    smlg::LabeledGraph value;
};
struct smlg_pattern {
    smlg::Pattern value;
};
struct smlg_ov {
    smlg::OvInstance value;
};
struct smlg_sets {
    smlg::SetFamily value;
};

namespace {

thread_local std::string g_last_error;

smlg_status status_of(const smlg::Error& err) {
    switch (err.code()) {
    case smlg::ErrorCode::Argument: return SMLG_ERR_ARGUMENT;
    case smlg::ErrorCode::Parse: return SMLG_ERR_PARSE;
    case smlg::ErrorCode::Validation: return SMLG_ERR_VALIDATION;
    case smlg::ErrorCode::Hypothesis: return SMLG_ERR_HYPOTHESIS;
    case smlg::ErrorCode::CapExceeded: return SMLG_ERR_CAP;
    case smlg::ErrorCode::Io: return SMLG_ERR_IO;
    }
    return SMLG_ERR_ARGUMENT;
}

// Runs the body, mapping exceptions onto status codes and the thread-local
// error message.
template <typename Fn>
smlg_status guarded(Fn&& body) {
    try {
        g_last_error.clear();
        body();
        return SMLG_OK;
    } catch (const smlg::Error& err) {
        g_last_error = err.what();
        return status_of(err);
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return SMLG_ERR_ARGUMENT;
    }
}

template <typename... Ptrs>
bool any_null(Ptrs... ptrs) {
    return ((ptrs == nullptr) || ...);
}

smlg_status null_argument() {
    g_last_error = "null pointer argument";
    return SMLG_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

smlg_split_plan to_c(const smlg::SplitPlan& plan) {
    smlg_split_plan out;
    out.case_id = static_cast<smlg_split_case>(plan.case_id);
    out.eps = plan.eps;
    out.eps_prime = plan.eps_prime;
    out.n_tilde = plan.n_tilde;
    out.m_tilde = plan.m_tilde;
    out.n_cap = plan.n_cap;
    out.m_cap = plan.m_cap;
    return out;
}

smlg::SplitPlan from_c(const smlg_split_plan& plan) {
    smlg::SplitPlan out;
    out.case_id = static_cast<smlg::SplitCase>(plan.case_id);
    out.eps = plan.eps;
    out.eps_prime = plan.eps_prime;
    out.n_tilde = plan.n_tilde;
    out.m_tilde = plan.m_tilde;
    out.n_cap = plan.n_cap;
    out.m_cap = plan.m_cap;
    return out;
}

} // namespace

extern "C" {

const char* smlg_version(void) { return "1.0.0"; }

const char* smlg_status_name(smlg_status status) {
    switch (status) {
    case SMLG_OK: return "ok";
    case SMLG_ERR_ARGUMENT: return "argument";
    case SMLG_ERR_PARSE: return "parse";
    case SMLG_ERR_VALIDATION: return "validation";
    case SMLG_ERR_HYPOTHESIS: return "hypothesis";
    case SMLG_ERR_CAP: return "cap-exceeded";
    case SMLG_ERR_IO: return "io";
    }
    return "unknown";
}

const char* smlg_last_error(void) { return g_last_error.c_str(); }

const char* smlg_rng_name(void) { return smlg::kRngName; }

void smlg_graph_free(smlg_graph* g) { delete g; }
void smlg_pattern_free(smlg_pattern* p) { delete p; }
void smlg_ov_free(smlg_ov* inst) { delete inst; }
void smlg_sets_free(smlg_sets* family) { delete family; }
void smlg_string_free(char* text) { delete[] text; }
void smlg_path_free(uint32_t* path) { delete[] path; }

smlg_status smlg_graph_parse(const char* text, smlg_graph** out) {
    if (any_null(text, out))
        return null_argument();
    return guarded([&] { *out = new smlg_graph{smlg::parse_graph(text)}; });
}

smlg_status smlg_graph_serialize(const smlg_graph* g, char** text_out) {
    if (any_null(g, text_out))
        return null_argument();
    return guarded([&] { *text_out = copy_string(smlg::serialize_graph(g->value)); });
}

smlg_status smlg_pattern_parse(const char* text, smlg_pattern** out) {
    if (any_null(text, out))
        return null_argument();
    return guarded([&] { *out = new smlg_pattern{smlg::parse_pattern(text)}; });
}

smlg_status smlg_pattern_serialize(const smlg_pattern* p, char** text_out) {
    if (any_null(p, text_out))
        return null_argument();
    return guarded([&] { *text_out = copy_string(smlg::serialize_pattern(p->value)); });
}

smlg_status smlg_ov_parse(const char* text, smlg_ov** out) {
    if (any_null(text, out))
        return null_argument();
    return guarded([&] { *out = new smlg_ov{smlg::parse_ov(text)}; });
}

smlg_status smlg_ov_serialize(const smlg_ov* inst, char** text_out) {
    if (any_null(inst, text_out))
        return null_argument();
    return guarded([&] { *text_out = copy_string(smlg::serialize_ov(inst->value)); });
}

smlg_status smlg_sets_parse(const char* text, smlg_sets** out) {
    if (any_null(text, out))
        return null_argument();
    return guarded([&] { *out = new smlg_sets{smlg::parse_sets(text)}; });
}

smlg_status smlg_sets_serialize(const smlg_sets* family, char** text_out) {
    if (any_null(family, text_out))
        return null_argument();
    return guarded([&] { *text_out = copy_string(smlg::serialize_sets(family->value)); });
}

size_t smlg_graph_node_count(const smlg_graph* g) { return g ? g->value.node_count() : 0; }
size_t smlg_graph_edge_count(const smlg_graph* g) { return g ? g->value.edge_count() : 0; }
size_t smlg_pattern_length(const smlg_pattern* p) { return p ? p->value.length() : 0; }

smlg_status smlg_graph_validate(const smlg_graph* g, char** report_out,
                                size_t* violations_out) {
    if (any_null(g, report_out, violations_out))
        return null_argument();
    return guarded([&] {
        const auto diagnostics = smlg::validate_graph(g->value);
        std::string report;
        for (const auto& diag : diagnostics) {
            report += diag.message;
            report += '\n';
        }
        *violations_out = diagnostics.size();
        *report_out = copy_string(report);
    });
}

smlg_status smlg_graph_is_deterministic(const smlg_graph* g, int* out) {
    if (any_null(g, out))
        return null_argument();
    return guarded([&] { *out = smlg::is_deterministic(g->value) ? 1 : 0; });
}

smlg_status smlg_graph_max_degree_sum(const smlg_graph* g, uint32_t* out) {
    if (any_null(g, out))
        return null_argument();
    return guarded([&] { *out = smlg::max_degree_sum(g->value); });
}

smlg_status smlg_graph_is_dag(const smlg_graph* g, int* out) {
    if (any_null(g, out))
        return null_argument();
    return guarded([&] { *out = smlg::is_dag(g->value) ? 1 : 0; });
}

smlg_status smlg_match_online(const smlg_graph* g, const smlg_pattern* p, int* matched_out) {
    if (any_null(g, p, matched_out))
        return null_argument();
    return guarded([&] { *matched_out = smlg::match_online(g->value, p->value) ? 1 : 0; });
}

smlg_status smlg_match_bruteforce(const smlg_graph* g, const smlg_pattern* p, uint32_t node_cap,
                                  uint32_t pattern_cap, int* matched_out) {
    if (any_null(g, p, matched_out))
        return null_argument();
    return guarded([&] {
        smlg::BruteForceCaps caps;
        if (node_cap != 0)
            caps.max_nodes = node_cap;
        if (pattern_cap != 0)
            caps.max_pattern = pattern_cap;
        *matched_out = smlg::match_bruteforce(g->value, p->value, caps) ? 1 : 0;
    });
}

smlg_status smlg_find_match_path(const smlg_graph* g, const smlg_pattern* p, uint32_t** path_out,
                                 size_t* length_out) {
    if (any_null(g, p, path_out, length_out))
        return null_argument();
    return guarded([&] {
        const auto witness = smlg::find_match_path(g->value, p->value);
        if (!witness) {
            *path_out = nullptr;
            *length_out = 0;
            return;
        }
        auto* path = new uint32_t[witness->path.size()];
        std::memcpy(path, witness->path.data(), witness->path.size() * sizeof(uint32_t));
        *path_out = path;
        *length_out = witness->path.size();
    });
}

smlg_status smlg_verify_witness(const smlg_graph* g, const smlg_pattern* p, const uint32_t* path,
                                size_t length, int* ok_out) {
    if (any_null(g, p, ok_out) || (path == nullptr && length != 0))
        return null_argument();
    return guarded([&] {
        smlg::MatchWitness witness;
        witness.path.assign(path, path + length);
        *ok_out = smlg::verify_witness(g->value, p->value, witness) ? 1 : 0;
    });
}

smlg_status smlg_ov_shape(const smlg_ov* inst, uint32_t* n_out, uint32_t* m_out,
                          uint32_t* d_out) {
    if (any_null(inst, n_out, m_out, d_out))
        return null_argument();
    *n_out = static_cast<uint32_t>(inst->value.x.size());
    *m_out = static_cast<uint32_t>(inst->value.y.size());
    *d_out = inst->value.dim;
    return SMLG_OK;
}

smlg_status smlg_ov_random(uint32_t n, uint32_t m, uint32_t d, double one_probability,
                           int plant_orthogonal_pair, uint64_t seed, smlg_ov** out) {
    if (any_null(out))
        return null_argument();
    return guarded([&] {
        *out = new smlg_ov{smlg::random_ov_instance(n, m, d, one_probability,
                                                    plant_orthogonal_pair != 0, seed)};
    });
}

smlg_status smlg_ov_solve_bruteforce(const smlg_ov* inst, int* answer_out) {
    if (any_null(inst, answer_out))
        return null_argument();
    return guarded([&] { *answer_out = smlg::solve_ov_bruteforce(inst->value) ? 1 : 0; });
}

smlg_status smlg_partition_and_solve(const smlg_ov* inst, uint32_t group_x, uint32_t group_y,
                                     int* answer_out, uint64_t* subproblems_out) {
    if (any_null(inst, answer_out, subproblems_out))
        return null_argument();
    return guarded([&] {
        const auto result = smlg::partition_and_solve(
            inst->value, group_x, group_y,
            [](const smlg::OvInstance& sub) { return smlg::solve_ov_bruteforce(sub); });
        *answer_out = result.answer ? 1 : 0;
        *subproblems_out = result.subproblems;
    });
}

smlg_status smlg_ceil_power_bound_check(double a, double b, const uint64_t* n_values,
                                        size_t count, double c, int* holds_out) {
    if (any_null(holds_out) || (n_values == nullptr && count != 0))
        return null_argument();
    return guarded([&] {
        *holds_out = smlg::ceil_power_bound_check(a, b, {n_values, count}, c) ? 1 : 0;
    });
}

const char* smlg_split_case_name(smlg_split_case case_id) {
    return smlg::to_string(static_cast<smlg::SplitCase>(case_id));
}

smlg_status smlg_split_plan_compute(double alpha, double delta, double beta, uint64_t n,
                                    smlg_split_plan* plan_out) {
    if (any_null(plan_out))
        return null_argument();
    return guarded([&] { *plan_out = to_c(smlg::split_plan(alpha, delta, beta, n)); });
}

smlg_status smlg_split_plan_verify(const smlg_split_plan* plan, uint64_t n, double alpha,
                                   double delta, double beta, double tol,
                                   smlg_plan_report* report_out) {
    if (any_null(plan, report_out))
        return null_argument();
    return guarded([&] {
        const auto report = smlg::verify_plan(from_c(*plan), n, alpha, delta, beta, tol);
        report_out->cond_a_exp = report.cond_a_exp;
        report_out->cond_b_exp = report.cond_b_exp;
        report_out->cond_at_ok = report.cond_at_ok ? 1 : 0;
        report_out->cond_bt_ok = report.cond_bt_ok ? 1 : 0;
        report_out->cond_c_ok = report.cond_c_ok ? 1 : 0;
        report_out->cond_d_ok = report.cond_d_ok ? 1 : 0;
        report_out->tol = report.tol;
    });
}

smlg_status smlg_reduction_graph(const smlg_ov* inst, smlg_variant variant,
                                 smlg_graph** graph_out, smlg_reduction_info* info_out) {
    if (any_null(inst, graph_out))
        return null_argument();
    return guarded([&] {
        auto rg = smlg::assemble_graph(inst->value.x, inst->value.dim,
                                       variant == SMLG_VARIANT_CYCLIC ? smlg::Variant::Cyclic
                                                                      : smlg::Variant::Acyclic);
        if (info_out != nullptr) {
            info_out->start_node = rg.start;
            info_out->end_node = rg.end;
            info_out->chain_length = static_cast<uint32_t>(rg.top_chain.size());
            info_out->w_component_count = static_cast<uint32_t>(rg.w_components.size());
            info_out->back_edge_count = static_cast<uint32_t>(rg.back_edges.size());
            for (size_t i = 0; i < 2; ++i) {
                info_out->back_edge_src[i] = i < rg.back_edges.size() ? rg.back_edges[i].src : 0;
                info_out->back_edge_dst[i] = i < rg.back_edges.size() ? rg.back_edges[i].dst : 0;
            }
        }
        *graph_out = new smlg_graph{std::move(rg.graph)};
    });
}

smlg_status smlg_reduction_pattern(const smlg_ov* inst, smlg_pattern** pattern_out) {
    if (any_null(inst, pattern_out))
        return null_argument();
    return guarded([&] {
        *pattern_out = new smlg_pattern{smlg::build_pattern(inst->value.y, inst->value.dim)};
    });
}

smlg_status smlg_sets_shape(const smlg_sets* family, uint32_t* count_out,
                            uint32_t* universe_out) {
    if (any_null(family, count_out, universe_out))
        return null_argument();
    *count_out = static_cast<uint32_t>(family->value.sets.size());
    *universe_out = family->value.universe;
    return SMLG_OK;
}

smlg_status smlg_sets_intersect(const smlg_sets* family, uint32_t i, uint32_t j, int* out) {
    if (any_null(family, out))
        return null_argument();
    return guarded([&] {
        const auto& sets = family->value.sets;
        if (i < 1 || i > sets.size() || j < 1 || j > sets.size())
            throw smlg::Error(smlg::ErrorCode::Argument, "set index out of range");
        *out = 0;
        for (uint32_t a : sets[i - 1])
            for (uint32_t b : sets[j - 1])
                if (a == b)
                    *out = 1;
    });
}

smlg_status smlg_sic_graph(const smlg_sets* family, smlg_graph** graph_out) {
    if (any_null(family, graph_out))
        return null_argument();
    return guarded([&] { *graph_out = new smlg_graph{smlg::build_sic_graph(family->value)}; });
}

smlg_status smlg_sic_query(const smlg_graph* g, uint32_t i, uint32_t j, int* out) {
    if (any_null(g, out))
        return null_argument();
    return guarded([&] { *out = smlg::sic_query(g->value, i, j) ? 1 : 0; });
}

smlg_status smlg_edit_distance(const char* a, const char* b, uint64_t* out) {
    if (any_null(a, b, out))
        return null_argument();
    return guarded([&] { *out = smlg::edit_distance(a, b); });
}

smlg_status smlg_substring_edit_distance(const char* text, const char* pattern, uint64_t* out) {
    if (any_null(text, pattern, out))
        return null_argument();
    return guarded([&] { *out = smlg::substring_edit_distance(text, pattern); });
}

smlg_status smlg_substring_ed_bruteforce(const char* text, const char* pattern,
                                         uint32_t text_cap, uint32_t pattern_cap,
                                         uint64_t* out) {
    if (any_null(text, pattern, out))
        return null_argument();
    return guarded([&] {
        smlg::SubstringEdCaps caps;
        if (text_cap != 0)
            caps.max_text = text_cap;
        if (pattern_cap != 0)
            caps.max_pattern = pattern_cap;
        *out = smlg::substring_ed_bruteforce(text, pattern, caps);
    });
}

} // extern "C"
