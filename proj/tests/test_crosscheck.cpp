#include "doctest.h"

#include "fixtures.hpp"
#include "pathhom/crosscheck.hpp"

using namespace pathhom;

TEST_CASE("random digraphs are reproducible") {
    RandomDigraphs a({2, 6, 0.35, false, 99}), b({2, 6, 0.35, false, 99});
    for (int i = 0; i < 20; ++i) CHECK(a.next() == b.next());
    RandomDigraphs asym({2, 6, 0.8, true, 5});
    for (int i = 0; i < 50; ++i) {
        const auto g = asym.next();
        CHECK(is_asymmetric(g));
        CHECK(g.vertex_count() >= 2);
        CHECK(g.vertex_count() <= 6);
    }
}

TEST_CASE("random maps are digraph maps") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_map(rng, 5, 0.4, true);
        CHECK(is_asymmetric(f.source));
        CHECK(is_asymmetric(f.target));
        for (const auto& [u, v] : f.source.arrows())
            CHECK((f.image[u] == f.image[v] || f.target.has_arrow(f.image[u], f.image[v])));
    }
}

TEST_CASE("oracles on fixed digraphs") {
    CHECK(oracle_pi_rank(fixtures::two_cycle(), 2) == 0);
    CHECK(oracle_pi_rank(fixtures::two_cycle(), 1) == 2);
    CHECK(oracle_betti(n_cube(2), TheorySpec::cluster(0, 3), 2) == 1);
    CHECK(oracle_betti(n_cube(2), TheorySpec::cluster(0, 3), 1) == 0);
    CHECK(oracle_betti(n_cube(3), TheorySpec::cluster(0, 7), 3) == 1);
    CHECK(oracle_betti(fixtures::two_cycle(), TheorySpec::primitive(), 1) == 1);
    CHECK(oracle_betti(fixtures::two_cycle(), TheorySpec::path(), 1) == 0);
    CHECK(oracle_betti(fixtures::two_cycle(), TheorySpec::primitive().with_reduced(true), 0) == 0);
    CHECK(oracle_betti(fixtures::tail_i(), TheorySpec::tail(0), 1) == 1);
}

TEST_CASE("single checks on fixed digraphs") {
    const auto cube = n_cube(3);
    CHECK(!check_primitive_equals_path(cube, 3));
    CHECK(check_primitive_equals_path(fixtures::two_cycle(), 3));
    CHECK(!check_reversal_cluster(cube, 4));
    CHECK(!check_cone_suspension(fixtures::three_cycle(), 4));
    CHECK(!check_directed_suspension_reduced(fixtures::three_cycle(), 6));
    // the unreduced comparison fails already in degree 2
    const auto msg = check_directed_suspension(fixtures::three_cycle(), 6);
    REQUIRE(msg);
    CHECK(msg->find("degree 2") != std::string::npos);
    CHECK(!check_locality(fixtures::nine_vertex(), 3));
    CHECK(!check_oracle_betti(fixtures::nine_vertex(), 4));
}

TEST_CASE("suite reports") {
    SuiteOptions none;
    none.instances = 0;
    const auto empty = run_theorem_suite(none);
    CHECK(empty.results.empty());
    CHECK(empty.passed());

    SuiteOptions small;
    small.instances = 8;
    const auto r = run_theorem_suite(small);
    CHECK(r.passed());
    REQUIRE(r.find("oracle-betti"));
    CHECK(r.find("oracle-betti")->checks == 8);
    CHECK(r.find("symmetric-target-witness")->passed());
    CHECK(to_string(r).find("PASS primitive-equals-path") != std::string::npos);
}
