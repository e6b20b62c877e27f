// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance        run every criterion
//   acceptance N      run criterion N only (14 also replays 1..13 first)
#include "../fixtures.hpp"
#include "pathhom/crosscheck.hpp"
#include "pathhom/error.hpp"
#include "pathhom/io.hpp"
#include "pathhom/spaces.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace pathhom;
using fixtures::bettis;
using V = std::vector<std::size_t>;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }
};

std::string show(const V& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

Chain e(std::initializer_list<VertexIndex> p, long long c = 1) { return Chain::of(ElementaryPath(p), c); }

bool is_plus_minus(const Chain& g, const Chain& want) { return g == want || g == -want; }

// Random-instance criteria: count failing instances, keep the first message.
struct Tally {
    std::size_t checked = 0, failed = 0;
    std::string first;

    void add(const CheckResult& r, const Digraph* g = nullptr) {
        ++checked;
        if (!r) return;
        if (failed++ == 0) first = *r + (g ? " on\n" + to_text(*g) : std::string());
    }
    void into(Outcome& o, const std::string& name) const {
        o.require(failed == 0, name + ": " + std::to_string(failed) + "/" + std::to_string(checked) +
                                   " instances fail, first: " + first);
    }
};

CheckResult guarded(const std::function<CheckResult()>& f) {
    try {
        return f();
    } catch (const std::exception& ex) {
        return std::string("exception: ") + ex.what();
    }
}

RandomDigraphs stream(std::uint64_t criterion, std::size_t max_vertices, bool asymmetric) {
    return RandomDigraphs({2, max_vertices, 0.35, asymmetric, kDefaultSeed + 1000 * criterion});
}

Outcome two_cycle() {
    Outcome o;
    const auto g = fixtures::two_cycle();
    const auto prim = bettis(compute_homology(g, TheorySpec::primitive(), 4));
    const auto path = bettis(compute_homology(g, TheorySpec::path(), 4));
    o.require(prim == V{1, 1, 0, 0, 0}, "primitive betti " + show(prim));
    o.require(path == V{1, 0, 0, 0, 0}, "path betti " + show(path));
    V ranks;
    for (int n = 0; n <= 3; ++n) ranks.push_back(pi_basis(g, n).rank());
    o.require(ranks == V{2, 2, 0, 0}, "primitive module ranks " + show(ranks));
    o.require(omega_basis(g, 2).rank() == 2, "path module rank in degree 2 is " + std::to_string(omega_basis(g, 2).rank()));
    if (o.pass) o.detail = "primitive " + show(prim) + ", path " + show(path);
    return o;
}

Outcome square() {
    Outcome o;
    const auto g = n_cube(2);
    const auto b = bettis(compute_homology(g, TheorySpec::cluster(0, 3), 5));
    o.require(b == V{0, 0, 1, 0, 0, 0}, "betti " + show(b));
    const auto basis = theta_cluster_basis(g, 0, 3, 2);
    o.require(basis.rank() == 1 && is_plus_minus(basis.generator(0), e({0, 1, 3}) - e({0, 2, 3})),
              "degree-2 generator differs");
    if (o.pass) o.detail = "betti " + show(b) + ", generator " + to_string(basis.generator(0));
    return o;
}

Outcome cube() {
    Outcome o;
    const auto g = n_cube(3);
    const auto b = bettis(compute_homology(g, TheorySpec::cluster(0, 7), 5));
    o.require(b == V{0, 0, 0, 1, 0, 0}, "betti " + show(b));
    const auto basis = theta_cluster_basis(g, 0, 7, 3);
    const Chain want =
        e({0, 1, 3, 7}) - e({0, 2, 3, 7}) - e({0, 1, 5, 7}) + e({0, 4, 5, 7}) - e({0, 4, 6, 7}) + e({0, 2, 6, 7});
    o.require(basis.rank() == 1 && is_plus_minus(basis.generator(0), want), "degree-3 generator differs");
    if (o.pass) o.detail = "betti " + show(b) + ", generator " + to_string(basis.generator(0));
    return o;
}

Outcome nine_vertex() {
    Outcome o;
    const auto g = fixtures::nine_vertex();
    const auto b = bettis(compute_homology(g, TheorySpec::cluster(0, 8), 5));
    const auto h2 = compute_homology(g, TheorySpec::path(), 2)[2];
    o.require(b == V{0, 0, 1, 0, 0, 0}, "cluster betti " + show(b) + ", expected (0,0,1,0,0,0)");
    o.require(h2.betti == 0 && h2.torsion.empty(), "path H_2 = " + to_string(h2));
    V ranks;
    for (int n = 1; n <= 4; ++n) ranks.push_back(theta_cluster_basis(g, 0, 8, n).rank());
    o.detail += "; cluster module ranks in degrees 1..4 " + show(ranks) + ", path H_2 = " + to_string(h2);
    return o;
}

Outcome suspended_cycle() {
    Outcome o;
    const auto s = directed_suspension(fixtures::three_cycle(), "a", "b");
    const auto b = bettis(compute_homology(s, TheorySpec::cluster(3, 4), 6));
    o.require(b == V{0, 0, 1, 1, 0, 0, 0}, "S^d(3-cycle) betti " + show(b) + ", expected (0,0,1,1,0,0,0)");
    const auto cut = fixtures::suspended_cycle_cut();
    const auto c = bettis(compute_homology(cut, TheorySpec::cluster(3, 4), 8));
    o.require(c == V{0, 0, 1, 0, 0, 0, 0, 0, 0}, "cut digraph betti " + show(c) + ", expected (0,0,1,0,0,0,0,0,0)");
    const auto reduced = bettis(reduced_homology(fixtures::three_cycle(), Theory::Primitive, 4));
    o.detail += "; reduced primitive betti of the 3-cycle " + show(reduced);
    return o;
}

Outcome tails() {
    Outcome o;
    const auto i = bettis(compute_homology(fixtures::tail_i(), TheorySpec::tail(0), 4));
    const auto ii = bettis(compute_homology(fixtures::tail_ii(), TheorySpec::tail(0), 4));
    const auto iii = bettis(compute_homology(fixtures::tail_iii(), TheorySpec::tail(0), 4));
    o.require(i == V{0, 1, 0, 0, 0}, "(i) " + show(i));
    o.require(ii == V{0, 0, 0, 0, 0}, "(ii) " + show(ii));
    o.require(iii == V{0, 0, 0, 0, 0}, "(iii) " + show(iii));
    const auto g = fixtures::tail_iii();
    const auto t2 = theta_tail_basis(g, 0, 2);
    const Matrix want = coordinates_in({e({0, 1, 3}), e({0, 2, 4}) - e({0, 3, 4})}, t2.ambient());
    o.require(t2.rank() == 2 && same_lattice(t2.coordinate_matrix(), want), "degree-2 tail module differs");
    o.require(theta_tail_basis(g, 0, 3).rank() == 0, "degree-3 tail module is nonzero");
    if (o.pass) o.detail = show(i) + " " + show(ii) + " " + show(iii);
    return o;
}

Outcome primitive_equals_path() {
    Outcome o;
    Tally t;
    auto gen = stream(7, 6, true);
    for (int k = 0; k < 100; ++k) {
        const auto g = gen.next();
        t.add(guarded([&] { return check_primitive_equals_path(g, 4); }), &g);
    }
    t.into(o, "primitive vs path");
    if (o.pass) o.detail = std::to_string(t.checked) + " asymmetric digraphs";
    return o;
}

Outcome reversals() {
    Outcome o;
    Tally prim, cl, th;
    auto gen = stream(8, 6, false);
    for (int k = 0; k < 100; ++k) {
        const auto g = gen.next();
        prim.add(guarded([&] { return check_reversal_primitive(g, 4); }), &g);
        cl.add(guarded([&] { return check_reversal_cluster(g, 4); }), &g);
        th.add(guarded([&] { return check_reversal_tail_head(g, 4); }), &g);
    }
    prim.into(o, "primitive");
    cl.into(o, "cluster");
    th.into(o, "tail/head");
    if (o.pass) o.detail = "100 digraphs, all endpoint choices";
    return o;
}

Outcome directed_suspension_shift() {
    Outcome o;
    Tally stated, reduced;
    auto gen = stream(9, 5, false);
    for (int k = 0; k < 50; ++k) {
        const auto g = gen.next();
        stated.add(guarded([&] { return check_directed_suspension(g, 5); }), &g);
        reduced.add(guarded([&] { return check_directed_suspension_reduced(g, 5); }), &g);
    }
    stated.into(o, "against unreduced homology");
    o.detail += "; against reduced homology: " + std::to_string(reduced.failed) + "/" +
                std::to_string(reduced.checked) + " fail";
    return o;
}

Outcome cone_suspension() {
    Outcome o;
    Tally t;
    auto gen = stream(10, 5, false);
    for (int k = 0; k < 50; ++k) {
        const auto g = gen.next();
        t.add(guarded([&] { return check_cone_suspension(g, 4); }), &g);
    }
    t.into(o, "cone/suspension");
    if (o.pass) o.detail = "50 digraphs, four constructions, every vertex";
    return o;
}

Outcome decompositions() {
    Outcome o;
    Tally dec, mem, loc;
    std::mt19937_64 rng(kDefaultSeed + 11);
    auto gen = stream(11, 6, false);
    for (int k = 0; k < 100; ++k) {
        const auto g = gen.next();
        dec.add(guarded([&] { return check_endpoint_decomposition(g, 3); }), &g);
        mem.add(guarded([&] { return check_membership_by_components(rng, g, 3); }), &g);
        loc.add(guarded([&] { return check_locality(g, 3); }), &g);
    }
    dec.into(o, "rank additivity");
    mem.into(o, "membership by components");
    loc.into(o, "locality");
    if (o.pass) o.detail = "100 digraphs";
    return o;
}

Outcome algebra() {
    Outcome o;
    std::mt19937_64 rng(kDefaultSeed + 12);
    Tally sq, diag, commutes;
    for (int k = 0; k < 1000; ++k) sq.add(guarded([&] { return check_differential_squares(rng); }));
    for (int k = 0; k < 100; ++k) diag.add(guarded([&] { return check_projection_diagrams(rng); }));
    for (int k = 0; k < 100; ++k) {
        const auto f = random_map(rng, 6, 0.4, false);
        commutes.add(guarded([&] { return check_induced_map_commutes(rng, f); }), &f.source);
    }
    sq.into(o, "squares");
    diag.into(o, "projection squares");
    commutes.into(o, "f# commutation");
    const auto g = make_digraph(3, {{0, 1}, {1, 2}});
    const auto f = check_digraph_map(std::vector<VertexIndex>{0, 1, 0}, g, fixtures::two_cycle());
    const Chain w = e({0, 1, 2});
    const Chain lhs = induced_map(f, boundary(w)), rhs = boundary(induced_map(f, w));
    o.require(lhs == e({1, 0}) + e({0, 1}), "f# d(e_012) = " + to_string(lhs));
    o.require(rhs == e({1, 0}) - e({0, 0}) + e({0, 1}), "d f#(e_012) = " + to_string(rhs));
    if (o.pass)
        o.detail = "1000 chains, 300 constrained chains, 100 maps; symmetric target: " + to_string(lhs) + " vs " +
                   to_string(rhs);
    return o;
}

Outcome oracles() {
    Outcome o;
    Tally betti, pi;
    auto gen = stream(13, 6, false);
    for (int k = 0; k < 200; ++k) {
        const auto g = gen.next();
        betti.add(guarded([&] { return check_oracle_betti(g, 4); }), &g);
        pi.add(guarded([&] { return check_oracle_pi_rank(g, 4); }), &g);
    }
    betti.into(o, "betti oracle");
    pi.into(o, "face oracle");
    if (o.pass) o.detail = "200 digraphs";
    return o;
}

struct Criterion {
    const char* name;
    double seconds_limit;  // 0 for none
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"two-cycle: primitive vs path homology", 1, two_cycle},
        {"square: cluster homology from 0 to 3", 1, square},
        {"3-cube: cluster homology from 0 to 7", 1, cube},
        {"nine-vertex digraph: cluster homology from 0 to 8", 2, nine_vertex},
        {"directed suspension of the 3-cycle and its cut variant", 2, suspended_cycle},
        {"tail homology of the three rooted examples", 1, tails},
        {"primitive equals path homology on asymmetric digraphs", 0, primitive_equals_path},
        {"reversal dualities", 0, reversals},
        {"directed suspension shifts cluster homology by two", 0, directed_suspension_shift},
        {"cone and suspension shifts", 0, cone_suspension},
        {"decompositions and locality", 0, decompositions},
        {"differential and diagram algebra", 0, algebra},
        {"SNF pipeline vs rational and face oracles", 0, oracles},
        {"normal form certificates", 0, nullptr},
    };
    return list;
}

bool run_one(std::size_t n, bool print) {
    const auto& c = criteria()[n - 1];
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    if (c.run) {
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.require(false, std::string("exception: ") + ex.what());
        }
    } else {
        const auto s = certificate_stats();
        o.require(s.failures == 0, std::to_string(s.failures) + " certificate failures");
        o.require(s.hnf_checked > 0 && s.snf_checked > 0 && s.saturation_checked > 0, "no certificates were checked");
        o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s.hnf_checked) + " Hermite, " +
                    std::to_string(s.snf_checked) + " Smith, " + std::to_string(s.saturation_checked) +
                    " saturation checks";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.seconds_limit > 0) o.require(secs < c.seconds_limit, "took " + std::to_string(secs) + " s");
    if (print) {
        char t[32];
        std::snprintf(t, sizeof t, "%.2f s", secs);
        std::string detail = o.detail;
        if (!detail.empty() && detail.front() == ';') detail = detail.substr(2);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << c.name << " [" << t << "]";
        if (!detail.empty()) std::cout << "\n      " << detail;
        std::cout << std::endl;
    }
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t count = criteria().size();
    if (argc > 1) {
        const std::size_t n = std::strtoul(argv[1], nullptr, 10);
        if (n < 1 || n > count) {
            std::cerr << "criterion must be 1.." << count << '\n';
            return 2;
        }
        // Certificates are judged over everything the other criteria compute.
        if (n == count)
            for (std::size_t k = 1; k < count; ++k) run_one(k, false);
        return run_one(n, true) ? 0 : 1;
    }
    std::size_t failed = 0;
    for (std::size_t k = 1; k <= count; ++k) failed += run_one(k, true) ? 0 : 1;
    std::cout << (count - failed) << "/" << count << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
