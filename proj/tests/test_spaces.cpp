#include "doctest.h"

#include "fixtures.hpp"
#include "pathhom/error.hpp"
#include "pathhom/spaces.hpp"

using namespace pathhom;

namespace {

Chain e(std::initializer_list<VertexIndex> p, long long c = 1) { return Chain::of(ElementaryPath(p), c); }

bool spans_exactly(const SubspaceBasis& b, const std::vector<Chain>& chains) {
    return same_lattice(coordinates_in(chains, b.ambient()), b.coordinate_matrix());
}

}  // namespace

TEST_CASE("allowed paths are enumerated in lexicographic order") {
    const auto g = fixtures::two_cycle();
    const auto p2 = allowed_paths(g, 2, PathConstraint::unrestricted());
    CHECK(p2.paths() == std::vector<ElementaryPath>{{0, 1, 0}, {1, 0, 1}});
    CHECK(allowed_paths(g, 0, PathConstraint::unrestricted()).size() == 2);
    CHECK(allowed_paths(g, -1, PathConstraint::unrestricted()).size() == 0);

    const auto cube = n_cube(3);
    CHECK(allowed_paths(cube, 3, PathConstraint::cluster(0, 7)).size() == 6);
    CHECK(allowed_paths(cube, 0, PathConstraint::cluster(0, 0)).size() == 0);
    CHECK(allowed_paths(cube, 1, PathConstraint::tail(0)).size() == 3);
    const auto heads = allowed_paths(cube, 2, PathConstraint::head(7));
    CHECK(heads.size() == 6);
    CHECK(std::is_sorted(heads.paths().begin(), heads.paths().end()));
    CHECK(heads.find({0, 1, 3, 7}) == std::nullopt);
    CHECK(heads.find({1, 3, 7}).has_value());
}

TEST_CASE("primitive and path modules of the two-cycle") {
    const auto g = fixtures::two_cycle();
    CHECK(pi_basis(g, 0).rank() == 2);
    CHECK(pi_basis(g, 1).rank() == 2);
    CHECK(pi_basis(g, 2).rank() == 0);
    CHECK(pi_basis(g, 3).rank() == 0);
    CHECK(omega_basis(g, 2).rank() == 2);
    CHECK(omega_basis(g, 2).contains(e({0, 1, 0})));
    CHECK(!pi_membership_by_faces(g, e({0, 1, 0})));
}

TEST_CASE("cluster generators on small cubes") {
    const auto square = n_cube(2);
    const auto t2 = theta_cluster_basis(square, 0, 3, 2);
    REQUIRE(t2.rank() == 1);
    CHECK(spans_exactly(t2, {e({0, 1, 3}) - e({0, 2, 3})}));

    const auto t3 = theta_cluster_basis(n_cube(3), 0, 7, 3);
    REQUIRE(t3.rank() == 1);
    const Chain expected =
        e({0, 1, 3, 7}) - e({0, 2, 3, 7}) - e({0, 1, 5, 7}) + e({0, 4, 5, 7}) - e({0, 4, 6, 7}) + e({0, 2, 6, 7});
    const Chain g = t3.generator(0);
    CHECK((g == expected || g == -expected));
    CHECK(is_saturated(t3));
}

TEST_CASE("tail module with two generators") {
    const auto g = fixtures::tail_iii();
    const auto t2 = theta_tail_basis(g, 0, 2);
    CHECK(t2.rank() == 2);
    CHECK(spans_exactly(t2, {e({0, 1, 3}), e({0, 2, 4}) - e({0, 3, 4})}));
    CHECK(theta_tail_basis(g, 0, 3).rank() == 0);
}

TEST_CASE("blocked and unblocked kernels agree") {
    const auto g = fixtures::nine_vertex();
    for (int n = 0; n <= 4; ++n)
        for (auto kind : {SubspaceKind::Omega, SubspaceKind::Pi}) {
            const auto a = subspace_basis(g, kind, PathConstraint::unrestricted(), n, true);
            const auto b = subspace_basis(g, kind, PathConstraint::unrestricted(), n, false);
            CHECK(a.coordinate_matrix() == b.coordinate_matrix());
        }
}

TEST_CASE("restriction blocks partition the ambient paths") {
    const auto g = n_cube(3);
    const auto sys = restriction_system(g, SubspaceKind::Pi, PathConstraint::unrestricted(), 3);
    std::size_t covered = 0;
    for (const auto& b : sys.blocks) {
        covered += b.columns.size();
        const auto& first = sys.ambient.path(b.columns.front());
        for (auto c : b.columns) {
            CHECK(sys.ambient.path(c).front() == first.front());
            CHECK(sys.ambient.path(c).back() == first.back());
        }
    }
    CHECK(covered == sys.ambient.size());
    CHECK(restriction_system(g, SubspaceKind::Pi, PathConstraint::unrestricted(), 3, false).blocks.size() == 1);
}

TEST_CASE("kind and constraint must match") {
    const auto g = n_cube(2);
    CHECK_THROWS_AS(subspace_basis(g, SubspaceKind::ThetaCluster, PathConstraint::tail(0), 2), Error);
    CHECK_THROWS_AS(subspace_basis(g, SubspaceKind::ThetaTail, PathConstraint::head(0), 2), Error);
}

TEST_CASE("graded pieces of the primitive module") {
    const auto g = n_cube(3);
    for (int n = 0; n <= 3; ++n) {
        const auto pi = pi_basis(g, n);
        for (auto grading : {Grading::Endpoints, Grading::Tail, Grading::Head}) {
            std::size_t total = 0;
            std::vector<Chain> all;
            for (const auto& [key, piece] : split_basis_by_endpoints(pi, grading)) {
                total += piece.rank();
                for (auto& w : piece.generators()) {
                    for (const auto& [p, c] : w.terms()) CHECK(key.admits(p));
                    all.push_back(w);
                }
            }
            CHECK(total == pi.rank());
            CHECK(spans_exactly(pi, all));
        }
    }
}

TEST_CASE("face criterion matches lattice membership") {
    const auto g = fixtures::nine_vertex();
    const auto pi = pi_basis(g, 2);
    for (const auto& w : pi.generators()) CHECK(pi_membership_by_faces(g, w));
    CHECK(!pi_membership_by_faces(g, e({0, 1, 7})));
    CHECK_THROWS_AS(pi_membership_by_faces(g, e({0, 7, 1})), Error);
}

TEST_CASE("lattice helpers") {
    const Matrix x = from_rows({{2, 0}, {0, 1}, {0, 0}});
    const Matrix y = from_rows({{1, 0}, {0, 2}, {0, 0}});
    CHECK(!same_lattice(x, y));
    CHECK(same_lattice(x, from_rows({{2, 2}, {0, 1}, {0, 0}})));
    CHECK(same_lattice(lattice_intersection(x, y), from_rows({{2, 0}, {0, 2}, {0, 0}})));
}
