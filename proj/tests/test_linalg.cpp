#include "doctest.h"

#include "pathhom/error.hpp"
#include "pathhom/linalg.hpp"

#include <random>

using namespace pathhom;

namespace {

// d on the six 3-paths 0->7 of the 3-cube, columns in the order
// 0137 0157 0237 0267 0457 0467; rows 017 027 047 037 057 067.
Matrix cube_cluster_matrix() {
    return from_rows({
        {-1, -1, 0, 0, 0, 0},
        {0, 0, -1, -1, 0, 0},
        {0, 0, 0, 0, -1, -1},
        {1, 0, 1, 0, 0, 0},
        {0, 1, 0, 0, 1, 0},
        {0, 0, 0, 1, 0, 1},
    });
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound, double density) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (static_cast<double>(rng() >> 11) / 9007199254740992.0 >= density) continue;
            m(r, c) = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
        }
    return m;
}

bool is_hermite(const HermiteDecomposition& d) {
    const auto& h = d.hermite;
    for (std::size_t j = 0; j < d.rank(); ++j) {
        const auto pr = d.pivot_rows[j];
        if (j > 0 && pr <= d.pivot_rows[j - 1]) return false;
        for (std::size_t r = 0; r < pr; ++r)
            if (!h(r, j).is_zero()) return false;
        if (h(pr, j) <= 0) return false;
        for (std::size_t l = 0; l < j; ++l)
            if (h(pr, l) < 0 || h(pr, l) >= h(pr, j)) return false;
    }
    for (std::size_t j = d.rank(); j < h.cols(); ++j)
        for (std::size_t r = 0; r < h.rows(); ++r)
            if (!h(r, j).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("kernel of [1 1] is spanned by (1,-1)") {
    const auto k = integer_kernel(from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(abs(k(0, 0)) == 1);
}

TEST_CASE("hnf of the identity is the identity") {
    const auto id = Matrix::identity(4);
    const auto d = hnf(id);
    CHECK(d.hermite == id);
    CHECK(d.rank() == 4);
}

TEST_CASE("hnf shape and certificate on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        const auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 9, 9, 0.6);
        const auto d = hnf(m);
        CHECK(is_hermite(d));
        CHECK(m * d.transform == d.hermite);
    }
}

TEST_CASE("cube cluster matrix has a rank one kernel") {
    const auto m = cube_cluster_matrix();
    CHECK(rational_rank(m) == 5);
    const auto k = integer_kernel(m);
    REQUIRE(k.cols() == 1);
    const std::vector<int> expected{1, -1, -1, 1, 1, -1};
    const Integer sign = k(0, 0);
    REQUIRE(abs(sign) == 1);
    for (std::size_t i = 0; i < 6; ++i) CHECK(k(i, 0) == sign * expected[i]);
    CHECK((m * k).is_zero());
}

TEST_CASE("snf examples") {
    auto s = snf(from_rows({{2, 0}, {0, 3}}));
    CHECK(s.diagonal == from_rows({{1, 0}, {0, 6}}));
    CHECK(s.invariant_factors == std::vector<Integer>{1, 6});

    s = snf(Matrix(3, 2));
    CHECK(s.diagonal.is_zero());
    CHECK(s.rank() == 0);

    s = snf(Matrix::identity(3));
    CHECK(s.diagonal == Matrix::identity(3));
}

TEST_CASE("snf certificate and divisibility on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const auto m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 8, 9, 0.7);
        const auto s = snf(m);
        CHECK(s.left * m * s.right == s.diagonal);
        CHECK(s.rank() == rational_rank(m));
        for (std::size_t i = 1; i < s.rank(); ++i) CHECK((s.invariant_factors[i] % s.invariant_factors[i - 1]).is_zero());
    }
}

TEST_CASE("integer kernel rank plus rational rank equals column count") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
        const auto m = random_matrix(rng, rows, cols, 9, t % 2 ? 0.15 : 0.5);
        const auto k = integer_kernel(m);
        CHECK(k.cols() + rational_rank(m) == cols);
        CHECK((m * k).is_zero());
        if (k.cols() > 0) {
            // kernels are saturated lattices
            for (const auto& f : snf(k).invariant_factors) CHECK(f == 1);
            CHECK(rational_kernel(m).cols() == k.cols());
        }
    }
}

TEST_CASE("integer_solve") {
    const std::vector<Integer> y{4, -2, 7};
    auto x = integer_solve(Matrix::identity(3), y);
    REQUIRE(x);
    CHECK(*x == y);

    const std::vector<Integer> three{3};
    CHECK_FALSE(integer_solve(from_rows({{2}}), three));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto b = random_matrix(rng, 8, 1 + rng() % 5, 5, 0.8);
        if (rational_rank(b) != b.cols()) continue;
        std::vector<Integer> xs(b.cols());
        for (auto& v : xs) v = static_cast<long long>(rng() % 21) - 10;
        std::vector<Integer> rhs(b.rows(), Integer(0));
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) rhs[i] += b(i, j) * xs[j];
        auto got = integer_solve(b, rhs);
        REQUIRE(got);
        CHECK(*got == xs);
    }
}

TEST_CASE("rational and modular ranks") {
    CHECK(rational_rank(Matrix::identity(5)) == 5);
    CHECK(rational_rank(Matrix(3, 4)) == 0);
    const auto m = from_rows({{2, 0}, {0, 3}});
    CHECK(modular_rank(m, 2) == 1);
    CHECK(modular_rank(m, 3) == 1);
    CHECK(modular_rank(m, 5) == 2);
    const auto k = modular_kernel(m, 2);
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == 1);
    CHECK(k(1, 0) == 0);
}

TEST_CASE("large entries fall back to arbitrary precision") {
    const Integer big = Integer(1) << 70;
    Matrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = 3;
    m(1, 1) = 5;
    const auto s = snf(m);
    CHECK(s.left * m * s.right == s.diagonal);
    CHECK(s.invariant_factors.size() == 2);
    CHECK(s.invariant_factors[0] == 1);
}

TEST_CASE("echelon lattice solves by substitution") {
    const auto k = integer_kernel(cube_cluster_matrix());
    EchelonLattice lat(6, sparse_columns(k));
    SparseVector y;
    for (std::size_t i = 0; i < 6; ++i) y.emplace_back(i, 3 * k(i, 0));
    auto x = lat.solve(y);
    REQUIRE(x);
    CHECK((*x)[0] == 3);
    SparseVector bad{{0, 1}};
    CHECK_FALSE(lat.solve(bad));
}

TEST_CASE("ring parsing") {
    CHECK(Ring::parse("Z") == Ring::integers());
    CHECK(Ring::parse("Fp:7").prime == 7);
    CHECK_THROWS_AS(Ring::parse("Fp:8"), Error);
    CHECK_THROWS_AS(Ring::parse("R"), Error);
    CHECK(Ring::parse("Fp:7").to_string() == "Fp:7");
}
