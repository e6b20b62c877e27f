#include "pathhom_c.h"

#include "pathhom/crosscheck.hpp"
#include "pathhom/error.hpp"
#include "pathhom/io.hpp"

#include <cstring>
#include <new>
#include <string>

struct ph_digraph {
    pathhom::Digraph graph;
};

struct ph_report {
    pathhom::Report report;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0;
thread_local std::size_t last_column = 0;

ph_status status_of(pathhom::ErrorCode code) {
    using pathhom::ErrorCode;
    switch (code) {
        case ErrorCode::LoopArrow: return PH_ERR_LOOP_ARROW;
        case ErrorCode::DuplicateArrow: return PH_ERR_DUPLICATE_ARROW;
        case ErrorCode::UnknownEndpoint: return PH_ERR_UNKNOWN_ENDPOINT;
        case ErrorCode::EmptyVertexSet: return PH_ERR_EMPTY_VERTEX_SET;
        case ErrorCode::DuplicateVertex: return PH_ERR_DUPLICATE_VERTEX;
        case ErrorCode::UnknownVertex: return PH_ERR_UNKNOWN_VERTEX;
        case ErrorCode::LabelCollision: return PH_ERR_LABEL_COLLISION;
        case ErrorCode::NotAMap: return PH_ERR_NOT_A_MAP;
        case ErrorCode::IndexOutOfRange: return PH_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::IrregularInput: return PH_ERR_IRREGULAR_INPUT;
        case ErrorCode::NotClusterChain: return PH_ERR_NOT_CLUSTER_CHAIN;
        case ErrorCode::DegreeZero: return PH_ERR_DEGREE_ZERO;
        case ErrorCode::NotTailChain: return PH_ERR_NOT_TAIL_CHAIN;
        case ErrorCode::NotHeadChain: return PH_ERR_NOT_HEAD_CHAIN;
        case ErrorCode::WrongDegree: return PH_ERR_WRONG_DEGREE;
        case ErrorCode::NotAllowedChain: return PH_ERR_NOT_ALLOWED_CHAIN;
        case ErrorCode::NoIntegerSolution: return PH_ERR_NO_INTEGER_SOLUTION;
        case ErrorCode::DimensionMismatch: return PH_ERR_DIMENSION_MISMATCH;
        case ErrorCode::DegreeOutOfRange: return PH_ERR_DEGREE_OUT_OF_RANGE;
        case ErrorCode::NotAsymmetric: return PH_ERR_NOT_ASYMMETRIC;
        case ErrorCode::ChainMapViolation: return PH_ERR_CHAIN_MAP_VIOLATION;
        case ErrorCode::InvalidTheory: return PH_ERR_INVALID_THEORY;
        case ErrorCode::InternalConsistency: return PH_ERR_INTERNAL_CONSISTENCY;
        case ErrorCode::ParseError: return PH_ERR_PARSE;
    }
    return PH_ERR_UNKNOWN;
}

ph_status fail(ph_status s, const std::string& message) {
    last_error = message;
    last_line = last_column = 0;
    return s;
}

// Runs f, translating exceptions into a status and the thread's last error.
template <class F>
ph_status guarded(F&& f) {
    try {
        return f();
    } catch (const pathhom::ParseError& e) {
        fail(PH_ERR_PARSE, e.what());
        last_line = e.line();
        last_column = e.column();
        return PH_ERR_PARSE;
    } catch (const pathhom::Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(PH_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(PH_ERR_UNKNOWN, e.what());
    } catch (...) {
        return fail(PH_ERR_UNKNOWN, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ph_status emit(pathhom::Digraph g, ph_digraph** out) {
    *out = new ph_digraph{std::move(g)};
    return PH_OK;
}

#define PH_REQUIRE(cond)                                                        \
    do {                                                                        \
        if (!(cond)) return fail(PH_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
    } while (0)

}  // namespace

extern "C" {

const char* ph_version(void) { return "1.0.0"; }

const char* ph_status_name(ph_status status) {
    switch (status) {
        case PH_OK: return "ok";
        case PH_ERR_UNDEFINED: return "Undefined";
        case PH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case PH_ERR_OUT_OF_MEMORY: return "OutOfMemory";
        case PH_ERR_UNKNOWN: return "Unknown";
        default: break;
    }
    // The remaining statuses follow the library's error codes one for one.
    const int offset = static_cast<int>(status) - static_cast<int>(PH_ERR_LOOP_ARROW);
    if (offset < 0 || offset > static_cast<int>(pathhom::ErrorCode::ParseError)) return "Unknown";
    return pathhom::error_code_name(static_cast<pathhom::ErrorCode>(offset)).data();
}

const char* ph_last_error(void) { return last_error.c_str(); }
size_t ph_last_error_line(void) { return last_line; }
size_t ph_last_error_column(void) { return last_column; }

void ph_string_free(char* s) { delete[] s; }

ph_status ph_digraph_parse(const char* text, ph_digraph** out) {
    PH_REQUIRE(text && out);
    return guarded([&] { return emit(pathhom::parse_digraph(text).graph, out); });
}

void ph_digraph_free(ph_digraph* g) { delete g; }

size_t ph_digraph_vertex_count(const ph_digraph* g) { return g ? g->graph.vertex_count() : 0; }
size_t ph_digraph_arrow_count(const ph_digraph* g) { return g ? g->graph.arrow_count() : 0; }

ph_status ph_digraph_to_text(const ph_digraph* g, char** out) {
    PH_REQUIRE(g && out);
    return guarded([&] {
        *out = copy_string(pathhom::to_text(g->graph));
        return PH_OK;
    });
}

ph_status ph_digraph_to_json(const ph_digraph* g, char** out) {
    PH_REQUIRE(g && out);
    return guarded([&] {
        *out = copy_string(pathhom::to_json(g->graph));
        return PH_OK;
    });
}

ph_status ph_construct_cube(unsigned n, ph_digraph** out) {
    PH_REQUIRE(out);
    return guarded([&] { return emit(pathhom::n_cube(n), out); });
}

ph_status ph_construct_inverse(const ph_digraph* g, ph_digraph** out) {
    PH_REQUIRE(g && out);
    return guarded([&] { return emit(pathhom::inverse_digraph(g->graph), out); });
}

ph_status ph_construct_cone(const ph_digraph* g, const char* apex, ph_digraph** out) {
    PH_REQUIRE(g && apex && out);
    return guarded([&] { return emit(pathhom::cone(g->graph, apex), out); });
}

ph_status ph_construct_inv_cone(const ph_digraph* g, const char* apex, ph_digraph** out) {
    PH_REQUIRE(g && apex && out);
    return guarded([&] { return emit(pathhom::inv_cone(g->graph, apex), out); });
}

ph_status ph_construct_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out) {
    PH_REQUIRE(g && a && b && out);
    return guarded([&] { return emit(pathhom::suspension(g->graph, a, b), out); });
}

ph_status ph_construct_inv_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out) {
    PH_REQUIRE(g && a && b && out);
    return guarded([&] { return emit(pathhom::inv_suspension(g->graph, a, b), out); });
}

ph_status ph_construct_dir_suspension(const ph_digraph* g, const char* a, const char* b, ph_digraph** out) {
    PH_REQUIRE(g && a && b && out);
    return guarded([&] { return emit(pathhom::directed_suspension(g->graph, a, b), out); });
}

ph_status ph_construct_box(const ph_digraph* g, const ph_digraph* h, ph_digraph** out) {
    PH_REQUIRE(g && h && out);
    return guarded([&] { return emit(pathhom::box_product(g->graph, h->graph), out); });
}

ph_status ph_construct_cluster(const ph_digraph* g, const char* from, const char* to, ph_digraph** out) {
    PH_REQUIRE(g && from && to && out);
    return guarded([&] {
        auto sub = pathhom::cluster_subgraph(g->graph, g->graph.index_of(from), g->graph.index_of(to));
        if (!sub) return fail(PH_ERR_UNDEFINED, std::string("no path from ") + from + " to " + to);
        return emit(std::move(*sub), out);
    });
}

ph_status ph_construct_tail(const ph_digraph* g, const char* from, ph_digraph** out) {
    PH_REQUIRE(g && from && out);
    return guarded([&] { return emit(pathhom::tail_subgraph(g->graph, g->graph.index_of(from)), out); });
}

ph_status ph_construct_head(const ph_digraph* g, const char* to, ph_digraph** out) {
    PH_REQUIRE(g && to && out);
    return guarded([&] { return emit(pathhom::head_subgraph(g->graph, g->graph.index_of(to)), out); });
}

void ph_compute_options_init(ph_compute_options* opts) {
    if (!opts) return;
    *opts = ph_compute_options{"primitive", nullptr, nullptr, 4, "Z", 0};
}

ph_status ph_compute(const ph_digraph* g, const ph_compute_options* opts, ph_report** out) {
    PH_REQUIRE(g && opts && opts->theory && out);
    return guarded([&] {
        using pathhom::Theory;
        const auto& graph = g->graph;
        if (opts->max_dim < 0) return fail(PH_ERR_INVALID_ARGUMENT, "max-dim must be non-negative");
        pathhom::TheorySpec spec;
        spec.theory = pathhom::parse_theory(opts->theory);
        const bool needs_from = spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::TailPrimitive;
        const bool needs_to = spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::HeadPrimitive;
        if (needs_from != (opts->from != nullptr) || needs_to != (opts->to != nullptr)) {
            std::string want = needs_from && needs_to ? "--from and --to"
                               : needs_from           ? "--from only"
                               : needs_to             ? "--to only"
                                                      : "no endpoints";
            return fail(PH_ERR_INVALID_ARGUMENT, "theory " + std::string(opts->theory) + " takes " + want);
        }
        if (needs_from) spec.a = graph.index_of(opts->from);
        if (needs_to) spec.b = graph.index_of(opts->to);
        if (spec.theory == Theory::ClusterPrimitive && !pathhom::cluster_subgraph(graph, spec.a, spec.b))
            return fail(PH_ERR_UNDEFINED, std::string("no path from ") + opts->from + " to " + opts->to);
        spec.reduced = opts->reduced != 0;
        spec.ring = pathhom::Ring::parse(opts->coefficients ? opts->coefficients : "Z");
        *out = new ph_report{pathhom::make_report(graph, spec, opts->max_dim)};
        return PH_OK;
    });
}

void ph_report_free(ph_report* r) { delete r; }

size_t ph_report_degree_count(const ph_report* r) { return r ? r->report.degrees.size() : 0; }

size_t ph_report_betti(const ph_report* r, size_t n) {
    if (!r || n >= r->report.degrees.size()) return static_cast<size_t>(-1);
    return r->report.degrees[n].betti;
}

ph_status ph_report_to_json(const ph_report* r, char** out) {
    PH_REQUIRE(r && out);
    return guarded([&] {
        *out = copy_string(pathhom::report_to_json(r->report));
        return PH_OK;
    });
}

ph_status ph_report_to_table(const ph_report* r, char** out) {
    PH_REQUIRE(r && out);
    return guarded([&] {
        *out = copy_string(pathhom::report_to_table(r->report));
        return PH_OK;
    });
}

ph_status ph_report_from_json(const char* text, ph_report** out) {
    PH_REQUIRE(text && out);
    return guarded([&] {
        *out = new ph_report{pathhom::report_from_json(text)};
        return PH_OK;
    });
}

void ph_verify_options_init(ph_verify_options* opts) {
    if (!opts) return;
    const pathhom::SuiteOptions d;
    *opts = ph_verify_options{d.seed, d.instances, d.max_vertices, d.max_dim};
}

ph_status ph_verify(const ph_verify_options* opts, int* passed, char** report) {
    PH_REQUIRE(opts && passed && report);
    return guarded([&] {
        if (opts->max_vertices < 2 || opts->max_dim < 0)
            return fail(PH_ERR_INVALID_ARGUMENT, "max-vertices must be at least 2 and max-dim non-negative");
        pathhom::SuiteOptions o;
        o.seed = opts->seed;
        o.instances = opts->instances;
        o.max_vertices = opts->max_vertices;
        o.max_dim = opts->max_dim;
        const auto r = pathhom::run_theorem_suite(o);
        *passed = r.passed() ? 1 : 0;
        *report = copy_string(pathhom::to_string(r));
        return PH_OK;
    });
}

}  // extern "C"
