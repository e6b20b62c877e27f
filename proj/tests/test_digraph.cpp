#include "doctest.h"

#include "fixtures.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/error.hpp"

using namespace pathhom;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalConsistency;
}

}  // namespace

TEST_CASE("validation rejects malformed digraphs") {
    CHECK(code_of([] { validate_digraph({"0"}, {{"0", "0"}}); }) == ErrorCode::LoopArrow);
    CHECK(code_of([] { validate_digraph({}, {}); }) == ErrorCode::EmptyVertexSet);
    CHECK(code_of([] { validate_digraph({"x", "x"}, {}); }) == ErrorCode::DuplicateVertex);
    CHECK(code_of([] { validate_digraph({"x"}, {{"x", "y"}}); }) == ErrorCode::UnknownEndpoint);
    CHECK(code_of([] { validate_digraph({"x", "y"}, {{"x", "y"}, {"x", "y"}}); }) == ErrorCode::DuplicateArrow);
    // loops are reported before the other problems on the same input
    CHECK(code_of([] { validate_digraph({"x", "x"}, {{"z", "z"}}); }) == ErrorCode::LoopArrow);
}

TEST_CASE("vertex order and lookup") {
    const auto g = validate_digraph({"b", "a", "c"}, {{"a", "c"}, {"b", "a"}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.label(0) == "b");
    CHECK(g.index_of("c") == 2);
    CHECK(!g.find("z"));
    CHECK(code_of([&] { g.index_of("z"); }) == ErrorCode::UnknownVertex);
    CHECK(g.has_arrow(1, 2));
    CHECK(!g.has_arrow(2, 1));
    CHECK(g.successors(0) == std::vector<VertexIndex>{1});
    CHECK(g.predecessors(2) == std::vector<VertexIndex>{1});
    CHECK(g.label_arrows() == std::vector<LabelArrow>{{"a", "c"}, {"b", "a"}});
}

TEST_CASE("symmetry and inversion") {
    CHECK(!is_asymmetric(fixtures::two_cycle()));
    CHECK(is_asymmetric(fixtures::three_cycle()));
    const auto inv = inverse_digraph(fixtures::three_cycle());
    CHECK(inv.has_arrow(1, 0));
    CHECK(!inv.has_arrow(0, 1));
    CHECK(inverse_digraph(inv) == fixtures::three_cycle());
}

TEST_CASE("cubes and box products") {
    const auto cube = n_cube(3);
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.arrow_count() == 12);
    CHECK(cube.has_arrow(0, 1));
    CHECK(cube.has_arrow(3, 7));
    CHECK(!cube.has_arrow(0, 3));
    CHECK(n_cube(0).vertex_count() == 1);

    const auto arrow = make_digraph(2, {{0, 1}});
    const auto square = box_product(arrow, arrow);
    CHECK(square.labels() == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
    CHECK(square.arrow_count() == 4);
    // the product of two arrows is the 2-cube up to labels
    const auto sq = n_cube(2);
    for (VertexIndex u = 0; u < 4; ++u)
        for (VertexIndex v = 0; v < 4; ++v) CHECK(square.has_arrow(u, v) == sq.has_arrow(u, v));
}

TEST_CASE("cones and suspensions") {
    const auto g = fixtures::three_cycle();
    const auto c = cone(g, "a");
    CHECK(c.vertex_count() == 4);
    CHECK(c.index_of("a") == 3);
    for (VertexIndex v = 0; v < 3; ++v) CHECK(c.has_arrow(v, 3));
    const auto ic = inv_cone(g, "a");
    for (VertexIndex v = 0; v < 3; ++v) CHECK(ic.has_arrow(3, v));
    const auto s = suspension(g, "a", "b");
    const auto is = inv_suspension(g, "a", "b");
    const auto ds = directed_suspension(g, "a", "b");
    CHECK(s.arrow_count() == 9);
    for (VertexIndex v = 0; v < 3; ++v) {
        CHECK(s.has_arrow(v, 3));
        CHECK(s.has_arrow(v, 4));
        CHECK(is.has_arrow(3, v));
        CHECK(is.has_arrow(4, v));
        CHECK(ds.has_arrow(3, v));
        CHECK(ds.has_arrow(v, 4));
    }
    CHECK(!ds.has_arrow(3, 4));
    CHECK(code_of([&] { cone(g, "1"); }) == ErrorCode::LabelCollision);
    CHECK(code_of([&] { suspension(g, "a", "a"); }) == ErrorCode::LabelCollision);
}

TEST_CASE("oriented distances") {
    const auto g = make_digraph(4, {{0, 1}, {1, 2}, {3, 0}});
    CHECK(oriented_distance(g, 0, 2) == 2u);
    CHECK(oriented_distance(g, 0, 0) == 0u);
    CHECK(!oriented_distance(g, 2, 0));
    const auto back = distances_to(g, 2);
    CHECK(back[3] == 3u);
}

TEST_CASE("cluster, tail and head subgraphs") {
    const auto cube = n_cube(3);
    const auto full = cluster_subgraph(cube, 0, 7);
    REQUIRE(full);
    CHECK(*full == cube);

    const auto arrow = make_digraph(2, {{0, 1}});
    CHECK(!cluster_subgraph(arrow, 1, 0));
    const auto single = cluster_subgraph(arrow, 1, 1);
    REQUIRE(single);
    CHECK(single->labels() == std::vector<std::string>{"1"});

    const auto g = make_digraph(5, {{0, 1}, {1, 2}, {3, 1}, {2, 4}});
    const auto sub = cluster_subgraph(g, 0, 2);
    REQUIRE(sub);
    CHECK(sub->labels() == std::vector<std::string>{"0", "1", "2"});
    CHECK(sub->arrow_count() == 2);

    const auto t = tail_subgraph(g, 1);
    CHECK(t.labels() == std::vector<std::string>{"1", "2", "4"});
    const auto h = head_subgraph(g, 1);
    CHECK(h.labels() == std::vector<std::string>{"0", "1", "3"});
    CHECK(h.arrow_count() == 2);

    // a vertex on a cycle keeps the whole cycle in its own cluster
    const auto cyc = cluster_subgraph(fixtures::three_cycle(), 0, 0);
    REQUIRE(cyc);
    CHECK(cyc->arrow_count() == 3);
}

TEST_CASE("digraph maps") {
    const auto g = make_digraph(3, {{0, 1}, {1, 2}});
    const auto h = fixtures::two_cycle();
    const auto f = check_digraph_map(std::vector<VertexIndex>{0, 1, 0}, g, h);
    CHECK(f.homomorphism);
    CHECK(!f.target_asymmetric);
    const auto collapse = check_digraph_map(std::vector<VertexIndex>{0, 0, 1}, g, h);
    CHECK(!collapse.homomorphism);
    const auto arrow = make_digraph(2, {{0, 1}});
    CHECK(code_of([&] { check_digraph_map(std::vector<VertexIndex>{1, 0, 1}, g, arrow); }) == ErrorCode::NotAMap);
    CHECK(code_of([&] { check_digraph_map(std::vector<VertexIndex>{0, 1}, g, arrow); }) == ErrorCode::NotAMap);
    const auto by_label = check_digraph_map({{"0", "0"}, {"1", "1"}, {"2", "1"}}, g, arrow);
    CHECK(by_label.image == std::vector<VertexIndex>{0, 1, 1});
    CHECK(code_of([&] { check_digraph_map({{"0", "0"}, {"1", "1"}, {"2", "q"}}, g, arrow); }) ==
          ErrorCode::UnknownVertex);
}
