#include "doctest.h"

#include "pathhom_c.h"

#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    ph_string_free(s);
    return out;
}

ph_digraph* parse(const char* text) {
    ph_digraph* g = nullptr;
    REQUIRE(ph_digraph_parse(text, &g) == PH_OK);
    return g;
}

}  // namespace

TEST_CASE("parse and print through the C interface") {
    ph_digraph* g = parse("vertex 0\nvertex 1\narrow 0 1\narrow 1 0\n");
    CHECK(ph_digraph_vertex_count(g) == 2);
    CHECK(ph_digraph_arrow_count(g) == 2);
    char* text = nullptr;
    REQUIRE(ph_digraph_to_text(g, &text) == PH_OK);
    CHECK(take(text) == "vertex 0\nvertex 1\narrow 0 1\narrow 1 0\n");
    char* json = nullptr;
    REQUIRE(ph_digraph_to_json(g, &json) == PH_OK);
    ph_digraph* back = parse(take(json).c_str());
    CHECK(ph_digraph_arrow_count(back) == 2);
    ph_digraph_free(back);
    ph_digraph_free(g);
    ph_digraph_free(nullptr);
}

TEST_CASE("errors set status and last error") {
    ph_digraph* g = nullptr;
    CHECK(ph_digraph_parse("vertex 0\narrow 0 0\n", &g) == PH_ERR_LOOP_ARROW);
    CHECK(g == nullptr);
    CHECK(std::string(ph_status_name(PH_ERR_LOOP_ARROW)) == "LoopArrow");
    CHECK(std::string(ph_last_error()).find("loop") != std::string::npos);
    CHECK(ph_digraph_parse("vertex 0\n  bogus\n", &g) == PH_ERR_PARSE);
    CHECK(ph_last_error_line() == 2);
    CHECK(ph_last_error_column() == 3);
    CHECK(ph_digraph_parse(nullptr, &g) == PH_ERR_INVALID_ARGUMENT);
    CHECK(std::string(ph_status_name(PH_ERR_PARSE)) == "ParseError");
    CHECK(std::string(ph_status_name(PH_ERR_UNDEFINED)) == "Undefined");
}

TEST_CASE("compute cluster homology of the square") {
    ph_digraph* sq = nullptr;
    REQUIRE(ph_construct_cube(2, &sq) == PH_OK);
    ph_compute_options opts;
    ph_compute_options_init(&opts);
    opts.theory = "cluster";
    opts.from = "0";
    opts.to = "3";
    opts.max_dim = 5;
    ph_report* r = nullptr;
    REQUIRE(ph_compute(sq, &opts, &r) == PH_OK);
    REQUIRE(ph_report_degree_count(r) == 6);
    for (size_t n = 0; n < 6; ++n) CHECK(ph_report_betti(r, n) == (n == 2 ? 1u : 0u));
    CHECK(ph_report_betti(r, 6) == static_cast<size_t>(-1));

    char* json = nullptr;
    REQUIRE(ph_report_to_json(r, &json) == PH_OK);
    const std::string first = take(json);
    ph_report* again = nullptr;
    REQUIRE(ph_report_from_json(first.c_str(), &again) == PH_OK);
    REQUIRE(ph_report_to_json(again, &json) == PH_OK);
    CHECK(take(json) == first);
    ph_report_free(again);
    ph_report_free(r);

    opts.to = nullptr;
    CHECK(ph_compute(sq, &opts, &r) == PH_ERR_INVALID_ARGUMENT);
    opts.to = "3";
    opts.coefficients = "Fp:4";
    CHECK(ph_compute(sq, &opts, &r) == PH_ERR_INVALID_THEORY);
    opts.coefficients = "Z";
    opts.from = "3";
    opts.to = "0";
    CHECK(ph_compute(sq, &opts, &r) == PH_ERR_UNDEFINED);
    ph_digraph_free(sq);
}

TEST_CASE("constructions") {
    ph_digraph* cyc = parse("vertex 0\nvertex 1\nvertex 2\narrow 0 1\narrow 1 2\narrow 2 0\n");
    ph_digraph* out = nullptr;
    REQUIRE(ph_construct_dir_suspension(cyc, "a", "b", &out) == PH_OK);
    CHECK(ph_digraph_vertex_count(out) == 5);
    CHECK(ph_digraph_arrow_count(out) == 9);
    ph_digraph_free(out);
    CHECK(ph_construct_cone(cyc, "1", &out) == PH_ERR_LABEL_COLLISION);
    REQUIRE(ph_construct_box(cyc, cyc, &out) == PH_OK);
    CHECK(ph_digraph_vertex_count(out) == 9);
    CHECK(ph_digraph_arrow_count(out) == 18);
    ph_digraph_free(out);
    REQUIRE(ph_construct_tail(cyc, "0", &out) == PH_OK);
    CHECK(ph_digraph_arrow_count(out) == 3);
    ph_digraph_free(out);
    CHECK(ph_construct_head(cyc, "7", &out) == PH_ERR_UNKNOWN_VERTEX);
    ph_digraph_free(cyc);
}

TEST_CASE("verify with no instances") {
    ph_verify_options opts;
    ph_verify_options_init(&opts);
    opts.instances = 0;
    int passed = 0;
    char* report = nullptr;
    REQUIRE(ph_verify(&opts, &passed, &report) == PH_OK);
    CHECK(passed == 1);
    CHECK(take(report).empty());
}
