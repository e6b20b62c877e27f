#include "pathhom/crosscheck.hpp"

#include "pathhom/error.hpp"
#include "pathhom/io.hpp"
#include "pathhom/spaces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace pathhom {

bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Digraph RandomDigraphs::next() {
    const std::size_t span = spec_.max_vertices - spec_.min_vertices + 1;
    const std::size_t n = spec_.min_vertices + static_cast<std::size_t>(rng_() % span);
    std::vector<Arrow> arrows;
    std::vector<bool> present(n * n, false);
    for (VertexIndex u = 0; u < n; ++u)
        for (VertexIndex v = 0; v < n; ++v) {
            if (u == v || !bernoulli(rng_, spec_.arrow_probability)) continue;
            if (spec_.asymmetric && present[v * n + u]) continue;
            present[u * n + v] = true;
            arrows.emplace_back(u, v);
        }
    return make_digraph(n, arrows);
}

DigraphMap random_map(std::mt19937_64& rng, std::size_t max_vertices, double p, bool asymmetric_source) {
    RandomDigraphs targets({1, max_vertices, p, true, rng()});
    const Digraph h = targets.next();
    const std::size_t n = 1 + rng() % max_vertices;
    std::vector<VertexIndex> image(n);
    for (auto& v : image) v = static_cast<VertexIndex>(rng() % h.vertex_count());
    std::vector<Arrow> arrows;
    std::vector<bool> present(n * n, false);
    for (VertexIndex u = 0; u < n; ++u)
        for (VertexIndex v = 0; v < n; ++v) {
            if (u == v || !bernoulli(rng, 0.5)) continue;
            if (image[u] != image[v] && !h.has_arrow(image[u], image[v])) continue;
            if (asymmetric_source && present[v * n + u]) continue;
            present[u * n + v] = true;
            arrows.emplace_back(u, v);
        }
    return check_digraph_map(image, make_digraph(n, arrows), h);
}

Chain random_chain(std::mt19937_64& rng, const RandomChainShape& shape) {
    Chain w(shape.degree);
    const std::size_t terms = 1 + rng() % 4;
    const std::size_t len = static_cast<std::size_t>(shape.degree) + 1;
    for (std::size_t t = 0; t < terms; ++t) {
        ElementaryPath p(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (i == 0 && shape.tail) {
                p[i] = *shape.tail;
                continue;
            }
            if (i + 1 == len && shape.head) {
                p[i] = *shape.head;
                continue;
            }
            p[i] = static_cast<VertexIndex>(rng() % shape.vertices);
        }
        if (shape.regular && !is_regular(p)) continue;
        w.add(p, static_cast<long long>(rng() % 11) - 5);
    }
    return w;
}

Chain random_allowed_chain(std::mt19937_64& rng, const Digraph& g, int degree) {
    const auto paths = allowed_paths(g, degree, PathConstraint::unrestricted()).paths();
    Chain w(degree);
    if (paths.empty()) return w;
    const std::size_t terms = 1 + rng() % 4;
    for (std::size_t t = 0; t < terms; ++t) w.add(paths[rng() % paths.size()], static_cast<long long>(rng() % 11) - 5);
    return w;
}

// ------------------------------------------------------------------ oracles

namespace {

// Deletion window [first, last) over the n+1 positions, signs alternate from first.
struct Window {
    std::size_t first;
    std::size_t trim;  // positions excluded at the end
    bool drop_irregular;
};

Window window_for(Theory t) {
    switch (t) {
        case Theory::PathGLMY: return {0, 0, true};
        case Theory::Primitive: return {0, 0, false};
        case Theory::ClusterPrimitive: return {1, 1, false};
        case Theory::TailPrimitive: return {1, 0, false};
        case Theory::HeadPrimitive: return {0, 1, false};
    }
    return {0, 0, false};
}

bool arrow_path(const Digraph& g, const ElementaryPath& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == p[i + 1] || !g.has_arrow(p[i], p[i + 1])) return false;
    return true;
}

std::vector<ElementaryPath> oracle_paths(const Digraph& g, const TheorySpec& spec, int n) {
    if (n < 0 || (spec.theory == Theory::ClusterPrimitive && n == 0)) return {};
    std::vector<ElementaryPath> layer;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) layer.push_back({v});
    for (int k = 0; k < n; ++k) {
        std::vector<ElementaryPath> next;
        for (const auto& p : layer)
            for (VertexIndex v = 0; v < g.vertex_count(); ++v)
                if (g.has_arrow(p.back(), v)) {
                    next.push_back(p);
                    next.back().push_back(v);
                }
        layer = std::move(next);
    }
    std::vector<ElementaryPath> out;
    for (auto& p : layer) {
        const bool keep = spec.theory == Theory::ClusterPrimitive ? p.front() == spec.a && p.back() == spec.b
                          : spec.theory == Theory::TailPrimitive  ? p.front() == spec.a
                          : spec.theory == Theory::HeadPrimitive  ? p.back() == spec.b
                                                                  : true;
        if (keep) out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::pair<ElementaryPath, int>> oracle_faces(const ElementaryPath& p, const Window& w) {
    std::vector<std::pair<ElementaryPath, int>> out;
    if (p.size() < 2) return out;
    for (std::size_t m = w.first; m + w.trim < p.size(); ++m) {
        ElementaryPath q;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != m) q.push_back(p[i]);
        bool regular = true;
        for (std::size_t i = 0; i + 1 < q.size(); ++i) regular = regular && q[i] != q[i + 1];
        if (w.drop_irregular && !regular) continue;
        out.emplace_back(std::move(q), (m - w.first) % 2 == 0 ? 1 : -1);
    }
    return out;
}

using SparseVector = std::vector<std::pair<std::size_t, Integer>>;  // sorted by index

// Exact rank of a set of sparse integer vectors by fraction-free insertion
// into a table of leading entries; each reduced vector is divided by its content.
std::size_t sparse_rank(std::vector<SparseVector> vectors) {
    std::map<std::size_t, SparseVector> pivots;
    for (auto& v : vectors) {
        while (!v.empty()) {
            auto it = pivots.find(v.front().first);
            if (it == pivots.end()) {
                pivots.emplace(v.front().first, std::move(v));
                break;
            }
            const SparseVector& p = it->second;
            const Integer scale_v = p.front().second, scale_p = v.front().second;
            SparseVector out;
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < p.size()) {
                Integer c;
                std::size_t k;
                if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
                    k = v[i].first;
                    c = scale_v * v[i++].second;
                } else if (i == v.size() || p[j].first < v[i].first) {
                    k = p[j].first;
                    c = -scale_p * p[j++].second;
                } else {
                    k = v[i].first;
                    c = scale_v * v[i++].second - scale_p * p[j++].second;
                }
                if (!c.is_zero()) out.emplace_back(k, std::move(c));
            }
            Integer content = 0;
            for (const auto& [k, c] : out) content = gcd(content, c);
            if (content > 1)
                for (auto& [k, c] : out) c /= content;
            v = std::move(out);
        }
    }
    return pivots.size();
}

// Rank of the face vectors of the degree-n paths: every face in the deletion
// window, or only the faces that are not allowed.
std::size_t oracle_face_rank(const Digraph& g, const TheorySpec& spec, int n, bool only_forbidden) {
    const auto paths = oracle_paths(g, spec, n);
    const auto win = window_for(spec.theory);
    std::map<ElementaryPath, std::size_t> rows;
    std::vector<SparseVector> vectors;
    for (const auto& p : paths) {
        std::map<std::size_t, Integer> acc;
        for (const auto& [q, s] : oracle_faces(p, win)) {
            if (only_forbidden && arrow_path(g, q)) continue;
            acc[rows.try_emplace(q, rows.size()).first->second] += s;
        }
        SparseVector v;
        for (auto& [k, c] : acc)
            if (!c.is_zero()) v.emplace_back(k, std::move(c));
        vectors.push_back(std::move(v));
    }
    return sparse_rank(std::move(vectors));
}

}  // namespace

// Rank-nullity over Q: the submodule is the null space of the forbidden-face
// matrix R, and the differential's image has rank rank(all faces) - rank(R).
std::size_t oracle_betti(const Digraph& g, const TheorySpec& spec, int n) {
    if (n < 0) return 0;
    const std::size_t paths = oracle_paths(g, spec, n).size();
    const std::size_t forbidden_n = n >= 1 ? oracle_face_rank(g, spec, n, true) : 0;
    std::size_t out_rank = 0;
    if (n >= 1)
        out_rank = oracle_face_rank(g, spec, n, false) - forbidden_n;
    else if (spec.reduced && paths > 0)
        out_rank = 1;
    const std::size_t in_rank = oracle_face_rank(g, spec, n + 1, false) - oracle_face_rank(g, spec, n + 1, true);
    return paths - forbidden_n - out_rank - in_rank;
}

std::size_t oracle_pi_rank(const Digraph& g, int n) {
    const auto paths = oracle_paths(g, TheorySpec::primitive(), n);
    if (n < 1) return paths.size();
    // One equation per (position, forbidden face) pattern.
    std::map<std::pair<std::size_t, ElementaryPath>, std::size_t> rows;
    std::vector<SparseVector> vectors;
    for (const auto& p : paths) {
        SparseVector v;
        for (std::size_t m = 0; m < p.size(); ++m) {
            ElementaryPath q;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (i != m) q.push_back(p[i]);
            if (arrow_path(g, q)) continue;
            v.emplace_back(rows.try_emplace({m, q}, rows.size()).first->second, 1);
        }
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        vectors.push_back(std::move(v));
    }
    return paths.size() - sparse_rank(std::move(vectors));
}

// ------------------------------------------------------------------ checks

namespace {

bool same_group(const HomologyGroup& x, const HomologyGroup& y) {
    return x.betti == y.betti && x.torsion == y.torsion;
}

std::string group_list(const std::vector<HomologyGroup>& hs) {
    std::string s;
    for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? ", " : "") + to_string(hs[i]);
    return "(" + s + ")";
}

CheckResult compare_lists(const std::string& what, const std::vector<HomologyGroup>& x,
                          const std::vector<HomologyGroup>& y) {
    if (x.size() != y.size()) return what + ": length mismatch";
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!same_group(x[i], y[i])) return what + ": " + group_list(x) + " vs " + group_list(y);
    return std::nullopt;
}

// The chains span exactly the lattice of the target basis.
bool spans(const std::vector<Chain>& chains, const SubspaceBasis& target) {
    try {
        return same_lattice(coordinates_in(chains, target.ambient()), target.coordinate_matrix());
    } catch (const Error&) {
        return false;
    }
}

std::vector<Chain> reversed(const std::vector<Chain>& chains) {
    std::vector<Chain> out;
    for (const auto& w : chains) out.push_back(reversal(w));
    return out;
}

std::string label_pair(const Digraph& g, VertexIndex a, VertexIndex b) { return "[" + g.label(a) + "," + g.label(b) + "]"; }

std::pair<std::string, std::string> fresh_labels(const Digraph& g) {
    std::string a = "a", b = "b";
    while (g.find(a) || g.find(b)) {
        a += "'";
        b += "'";
    }
    return {a, b};
}

// Chain of H (a subgraph of G sharing labels) rewritten in G's indices.
Chain relabel(const Chain& w, const Digraph& from, const Digraph& to) {
    Chain out(w.degree());
    for (const auto& [p, c] : w.terms()) {
        ElementaryPath q;
        for (auto v : p) q.push_back(to.index_of(from.label(v)));
        out.add(q, c);
    }
    return out;
}

bool is_induced_in(const Digraph& sub, const Digraph& g) {
    for (VertexIndex u = 0; u < sub.vertex_count(); ++u)
        for (VertexIndex v = 0; v < sub.vertex_count(); ++v) {
            const auto gu = g.index_of(sub.label(u)), gv = g.index_of(sub.label(v));
            if (g.has_arrow(gu, gv) != sub.has_arrow(u, v)) return false;
        }
    return true;
}

}  // namespace

CheckResult check_primitive_equals_path(const Digraph& g, int n_max) {
    if (auto r = compare_lists("primitive vs path homology", compute_homology(g, TheorySpec::primitive(), n_max),
                               compute_homology(g, TheorySpec::path(), n_max)))
        return r;
    for (int n = 0; n <= n_max; ++n) {
        const auto pi = pi_basis(g, n), omega = omega_basis(g, n);
        if (!same_lattice(pi.coordinate_matrix(), omega.coordinate_matrix()))
            return "primitive and path submodules differ in degree " + std::to_string(n);
    }
    return std::nullopt;
}

CheckResult check_reversal_primitive(const Digraph& g, int n_max) {
    const auto inv = inverse_digraph(g);
    const auto rg = build_complex(g, TheorySpec::primitive(), n_max);
    const auto ri = build_complex(inv, TheorySpec::primitive(), n_max);
    if (auto r = compare_lists("primitive homology of G and its inverse", homology_all(rg), homology_all(ri))) return r;
    for (int n = 0; n <= n_max; ++n)
        if (!spans(reversed(rg.basis(n).generators()), ri.basis(n)))
            return "reversal does not carry the primitive submodule onto the inverse in degree " + std::to_string(n);
    return std::nullopt;
}

CheckResult check_reversal_cluster(const Digraph& g, int n_max) {
    const auto inv = inverse_digraph(g);
    for (VertexIndex a = 0; a < g.vertex_count(); ++a)
        for (VertexIndex b = 0; b < g.vertex_count(); ++b) {
            const auto rg = build_complex(g, TheorySpec::cluster(a, b), n_max);
            const auto ri = build_complex(inv, TheorySpec::cluster(b, a), n_max);
            if (auto r = compare_lists("cluster " + label_pair(g, a, b), homology_all(rg), homology_all(ri))) return r;
            for (int n = 0; n <= n_max; ++n)
                if (!spans(reversed(rg.basis(n).generators()), ri.basis(n)))
                    return "reversal mismatch for cluster " + label_pair(g, a, b) + " in degree " + std::to_string(n);
        }
    return std::nullopt;
}

CheckResult check_reversal_tail_head(const Digraph& g, int n_max) {
    const auto inv = inverse_digraph(g);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const std::pair<TheorySpec, TheorySpec> pairs[] = {{TheorySpec::head(v), TheorySpec::tail(v)},
                                                           {TheorySpec::tail(v), TheorySpec::head(v)}};
        for (const auto& [on_g, on_inv] : pairs) {
            const auto rg = build_complex(g, on_g, n_max);
            const auto ri = build_complex(inv, on_inv, n_max);
            const auto what = theory_name(on_g.theory) + " at " + g.label(v);
            if (auto r = compare_lists(what, homology_all(rg), homology_all(ri))) return r;
            for (int n = 0; n <= n_max; ++n)
                if (!spans(reversed(rg.basis(n).generators()), ri.basis(n)))
                    return "reversal mismatch for " + what + " in degree " + std::to_string(n);
        }
    }
    return std::nullopt;
}

CheckResult check_directed_suspension(const Digraph& g, int n_max) {
    const auto [a, b] = fresh_labels(g);
    const auto report = suspension_isomorphism_check(g, a, b, n_max);
    for (const auto& d : report.degrees) {
        if (!same_group(d.cluster, d.unreduced))
            return "degree " + std::to_string(d.n) + ": cluster homology " + to_string(d.cluster) +
                   " but primitive homology in degree " + std::to_string(d.n - 2) + " is " + to_string(d.unreduced);
        if (d.theta_rank != d.pi_rank)
            return "degree " + std::to_string(d.n) + ": cluster module rank " + std::to_string(d.theta_rank) +
                   " vs primitive rank " + std::to_string(d.pi_rank);
    }
    return std::nullopt;
}

CheckResult check_directed_suspension_reduced(const Digraph& g, int n_max) {
    const auto [a, b] = fresh_labels(g);
    const auto report = suspension_isomorphism_check(g, a, b, n_max);
    for (const auto& d : report.degrees) {
        const auto at = "degree " + std::to_string(d.n) + ": ";
        if (!same_group(d.cluster, d.reduced))
            return at + "cluster homology " + to_string(d.cluster) + " vs reduced " + to_string(d.reduced);
        if (!d.projection_lands) return at + "projection leaves the primitive module";
        if (!d.projection_commutes) return at + "projection does not commute with the differentials";
        if (d.projected_rank != d.theta_rank) return at + "projection is not injective";
        const std::size_t expected = d.n == 2 ? d.pi_rank - 1 : d.pi_rank;
        if (d.theta_rank != expected)
            return at + "cluster module rank " + std::to_string(d.theta_rank) + ", expected " + std::to_string(expected);
    }
    return std::nullopt;
}

CheckResult check_cone_suspension(const Digraph& g, int n_max) {
    const auto [a, b] = fresh_labels(g);
    const auto cg = cone(g, a), icg = inv_cone(g, a);
    const auto sg = suspension(g, a, b), isg = inv_suspension(g, a, b);
    const auto ca = cg.index_of(a), ica = icg.index_of(a);
    const auto sa = sg.index_of(a), sb = sg.index_of(b), isa = isg.index_of(a), isb = isg.index_of(b);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        std::vector<HomologyGroup> tail{HomologyGroup{}}, head{HomologyGroup{}};
        if (n_max >= 1) {
            for (auto& h : compute_homology(g, TheorySpec::tail(v), n_max - 1)) tail.push_back(h);
            for (auto& h : compute_homology(g, TheorySpec::head(v), n_max - 1)) head.push_back(h);
        }
        const auto at = " at " + g.label(v);
        const std::pair<std::string, std::vector<HomologyGroup>> cases[] = {
            {"cone" + at, compute_homology(cg, TheorySpec::cluster(v, ca), n_max)},
            {"suspension (first apex)" + at, compute_homology(sg, TheorySpec::cluster(v, sa), n_max)},
            {"suspension (second apex)" + at, compute_homology(sg, TheorySpec::cluster(v, sb), n_max)},
        };
        for (const auto& [what, hs] : cases)
            if (auto r = compare_lists(what + " vs shifted tail homology", hs, tail)) return r;
        const std::pair<std::string, std::vector<HomologyGroup>> inverse_cases[] = {
            {"inverse cone" + at, compute_homology(icg, TheorySpec::cluster(ica, v), n_max)},
            {"inverse suspension (first apex)" + at, compute_homology(isg, TheorySpec::cluster(isa, v), n_max)},
            {"inverse suspension (second apex)" + at, compute_homology(isg, TheorySpec::cluster(isb, v), n_max)},
        };
        for (const auto& [what, hs] : inverse_cases)
            if (auto r = compare_lists(what + " vs shifted head homology", hs, head)) return r;
    }
    return std::nullopt;
}

CheckResult check_endpoint_decomposition(const Digraph& g, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (auto kind : {SubspaceKind::Omega, SubspaceKind::Pi}) {
            const auto whole = subspace_basis(g, kind, PathConstraint::unrestricted(), n, false);
            const auto blocked = subspace_basis(g, kind, PathConstraint::unrestricted(), n, true);
            const auto name = std::string(kind == SubspaceKind::Omega ? "path" : "primitive") + " module in degree " +
                              std::to_string(n);
            if (!(whole.coordinate_matrix() == blocked.coordinate_matrix()))
                return name + ": blockwise kernel differs from the global kernel";
            const Grading gradings[] = {Grading::Endpoints, Grading::Tail, Grading::Head};
            for (auto grading : gradings) {
                if (kind == SubspaceKind::Omega && grading != Grading::Endpoints) continue;
                std::size_t total = 0;
                std::vector<Chain> pieces;
                for (const auto& [key, piece] : split_basis_by_endpoints(whole, grading)) {
                    total += piece.rank();
                    for (auto& w : piece.generators()) pieces.push_back(std::move(w));
                }
                if (total != whole.rank())
                    return name + ": graded pieces have total rank " + std::to_string(total) + " instead of " +
                           std::to_string(whole.rank());
                if (!spans(pieces, whole)) return name + ": graded pieces do not span the module";
            }
        }
    }
    return std::nullopt;
}

CheckResult check_membership_by_components(std::mt19937_64& rng, const Digraph& g, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto pi = pi_basis(g, n);
        const auto omega = omega_basis(g, n);
        for (int trial = 0; trial < 4; ++trial) {
            for (const auto* basis : {&pi, &omega}) {
                Chain w(n);
                for (std::size_t t = 0; basis->rank() > 0 && t < 3; ++t)
                    w += Integer(static_cast<long long>(rng() % 7) - 3) * basis->generator(rng() % basis->rank());
                if (trial % 2 == 1) w += random_allowed_chain(rng, g, n);
                const bool member = basis->contains(w);
                bool parts = true;
                for (const auto& [key, c] : decompose_by_endpoints(w)) parts = parts && basis->contains(c);
                if (parts != member) return "membership differs from endpoint components in degree " + std::to_string(n);
                if (basis == &pi) {
                    bool tails = true, heads = true;
                    for (const auto& [key, c] : decompose_by_tail(w)) tails = tails && pi.contains(c);
                    for (const auto& [key, c] : decompose_by_head(w)) heads = heads && pi.contains(c);
                    if (tails != member || heads != member)
                        return "membership differs from tail/head components in degree " + std::to_string(n);
                    if (pi_membership_by_faces(g, w) != member)
                        return "face criterion disagrees with the lattice in degree " + std::to_string(n) + " for " +
                               to_string(w, g);
                }
            }
        }
    }
    return std::nullopt;
}

CheckResult check_locality(const Digraph& g, int n_max) {
    for (VertexIndex a = 0; a < g.vertex_count(); ++a) {
        const auto tail_graph = tail_subgraph(g, a);
        const auto head_graph = head_subgraph(g, a);
        if (!is_induced_in(tail_graph, g)) return "tail subgraph at " + g.label(a) + " is not induced";
        if (!is_induced_in(head_graph, g)) return "head subgraph at " + g.label(a) + " is not induced";
        for (int n = 0; n <= n_max; ++n) {
            const auto here = subspace_basis(g, SubspaceKind::Pi, PathConstraint::tail(a), n);
            const auto there = subspace_basis(tail_graph, SubspaceKind::Pi, PathConstraint::tail(tail_graph.index_of(g.label(a))), n);
            std::vector<Chain> moved;
            for (const auto& w : there.generators()) moved.push_back(relabel(w, tail_graph, g));
            if (!spans(moved, here)) return "tail module at " + g.label(a) + " changes in the tail subgraph";
            const auto here_h = subspace_basis(g, SubspaceKind::Pi, PathConstraint::head(a), n);
            const auto there_h = subspace_basis(head_graph, SubspaceKind::Pi, PathConstraint::head(head_graph.index_of(g.label(a))), n);
            moved.clear();
            for (const auto& w : there_h.generators()) moved.push_back(relabel(w, head_graph, g));
            if (!spans(moved, here_h)) return "head module at " + g.label(a) + " changes in the head subgraph";
        }
        for (VertexIndex b = 0; b < g.vertex_count(); ++b) {
            const auto sub = cluster_subgraph(g, a, b);
            if (!sub) continue;
            if (!is_induced_in(*sub, g)) return "cluster subgraph " + label_pair(g, a, b) + " is not induced";
            const auto sa = sub->index_of(g.label(a)), sb = sub->index_of(g.label(b));
            for (int n = 1; n <= n_max; ++n) {
                const auto here = subspace_basis(g, SubspaceKind::Pi, PathConstraint::cluster(a, b), n);
                const auto there = subspace_basis(*sub, SubspaceKind::Pi, PathConstraint::cluster(sa, sb), n);
                std::vector<Chain> moved;
                for (const auto& w : there.generators()) moved.push_back(relabel(w, *sub, g));
                if (!spans(moved, here))
                    return "cluster module " + label_pair(g, a, b) + " changes in the cluster subgraph, degree " +
                           std::to_string(n);
                // The cluster piece is the intersection of the tail and head pieces.
                const auto all = allowed_paths(g, n, PathConstraint::unrestricted());
                const auto tails = subspace_basis(g, SubspaceKind::Pi, PathConstraint::tail(a), n).generators();
                const auto heads = subspace_basis(g, SubspaceKind::Pi, PathConstraint::head(b), n).generators();
                const Matrix meet = lattice_intersection(coordinates_in(tails, all), coordinates_in(heads, all));
                if (!same_lattice(meet, coordinates_in(here.generators(), all)))
                    return "cluster module " + label_pair(g, a, b) + " is not the meet of tail and head modules";
            }
        }
    }
    return std::nullopt;
}

CheckResult check_cluster_projection_morphism(const Digraph& g, int n_max) {
    std::vector<SubspaceBasis> pis;
    for (int n = 0; n + 2 <= n_max; ++n) pis.push_back(pi_basis(g, n));
    for (VertexIndex a = 0; a < g.vertex_count(); ++a)
        for (VertexIndex b = 0; b < g.vertex_count(); ++b)
            for (int n = 1; n <= n_max; ++n)
                for (const auto& w : theta_cluster_basis(g, a, b, n).generators()) {
                    const Chain p = cluster_projection(w);
                    if (n >= 2 && !pis[static_cast<std::size_t>(n - 2)].contains(p))
                        return "projection of a cluster cycle " + label_pair(g, a, b) + " leaves the primitive module";
                    if (!(cluster_projection(cluster_differential(w)) == augmented_boundary(p)))
                        return "projection does not commute with the differentials for " + label_pair(g, a, b);
                }
    return std::nullopt;
}

CheckResult check_oracle_betti(const Digraph& g, int n_max) {
    const VertexIndex last = static_cast<VertexIndex>(g.vertex_count() - 1);
    const TheorySpec specs[] = {TheorySpec::primitive(),
                                TheorySpec::path(),
                                TheorySpec::primitive().with_reduced(true),
                                TheorySpec::cluster(0, last),
                                TheorySpec::cluster(last, 0),
                                TheorySpec::tail(0),
                                TheorySpec::head(last)};
    for (const auto& spec : specs) {
        const auto hs = compute_homology(g, spec, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const auto expected = oracle_betti(g, spec, n);
            if (hs[static_cast<std::size_t>(n)].betti != expected)
                return theory_name(spec.theory) + " betti in degree " + std::to_string(n) + ": " +
                       std::to_string(hs[static_cast<std::size_t>(n)].betti) + " vs oracle " + std::to_string(expected);
        }
    }
    return std::nullopt;
}

CheckResult check_oracle_pi_rank(const Digraph& g, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        const auto r = pi_basis(g, n).rank(), o = oracle_pi_rank(g, n);
        if (r != o)
            return "primitive rank in degree " + std::to_string(n) + ": " + std::to_string(r) + " vs face oracle " +
                   std::to_string(o);
    }
    return std::nullopt;
}

CheckResult check_differential_squares(std::mt19937_64& rng) {
    const int degree = 1 + static_cast<int>(rng() % 6);
    const std::size_t verts = 2 + rng() % 5;
    const auto a = static_cast<VertexIndex>(rng() % verts), b = static_cast<VertexIndex>(rng() % verts);
    RandomChainShape shape;
    shape.vertices = verts;
    shape.degree = degree;
    const Chain w = random_chain(rng, shape);
    if (!boundary(boundary(w)).is_zero()) return "boundary squared is nonzero on " + to_string(w);
    if (!(reversal(boundary(w)) == boundary(reversal(w)))) return "reversal does not commute with the boundary on " + to_string(w);
    Chain resum(w.degree());
    for (const auto& [k, c] : decompose_by_endpoints(w)) resum += c;
    if (!(resum == w)) return "endpoint components do not re-sum on " + to_string(w);
    shape.regular = true;
    const Chain r = random_chain(rng, shape);
    if (!regular_boundary(regular_boundary(r)).is_zero()) return "regular boundary squared is nonzero on " + to_string(r);
    if (degree >= 2) {
        const Chain c = random_chain(rng, {verts, degree, a, b});
        if (!cluster_differential(cluster_differential(c)).is_zero()) return "d squared is nonzero on " + to_string(c);
    }
    const Chain t = random_chain(rng, {verts, degree, a, std::nullopt});
    if (!tail_differential(tail_differential(t)).is_zero()) return "tail differential squared is nonzero on " + to_string(t);
    const Chain h = random_chain(rng, {verts, degree, std::nullopt, b});
    if (!head_differential(head_differential(h)).is_zero()) return "head differential squared is nonzero on " + to_string(h);
    return std::nullopt;
}

CheckResult check_projection_diagrams(std::mt19937_64& rng) {
    const std::size_t verts = 2 + rng() % 5;
    const auto a = static_cast<VertexIndex>(rng() % verts), b = static_cast<VertexIndex>(rng() % verts);
    const Chain c = random_chain(rng, {verts, 1 + static_cast<int>(rng() % 6), a, b});
    if (!(cluster_projection(cluster_differential(c)) == augmented_boundary(cluster_projection(c))))
        return "cluster projection square fails on " + to_string(c);
    const Chain t = random_chain(rng, {verts, static_cast<int>(rng() % 7), a, std::nullopt});
    if (!(tail_projection(tail_differential(t)) == augmented_boundary(tail_projection(t))))
        return "tail projection square fails on " + to_string(t);
    const Chain h = random_chain(rng, {verts, static_cast<int>(rng() % 7), std::nullopt, b});
    if (!(head_projection(head_differential(h)) == augmented_boundary(head_projection(h))))
        return "head projection square fails on " + to_string(h);
    return std::nullopt;
}

CheckResult check_induced_map_commutes(std::mt19937_64& rng, const DigraphMap& f) {
    for (int degree = 1; degree <= 4; ++degree) {
        const Chain w = random_allowed_chain(rng, f.source, degree);
        if (!(induced_map(f, boundary(w)) == boundary(induced_map(f, w))))
            return "f# does not commute with the boundary on " + to_string(w, f.source);
    }
    return std::nullopt;
}

CheckResult check_functoriality(std::mt19937_64& rng, const DigraphMap& f, int n_max) {
    const auto n = static_cast<VertexIndex>(f.source.vertex_count());
    const auto a = static_cast<VertexIndex>(rng() % n), b = static_cast<VertexIndex>(rng() % n);
    // Collapsing an arrow at a fixed endpoint leaves an uncancelled face, so
    // the constrained theories are only checked for maps that keep those arrows.
    const auto collapses = [&](VertexIndex v, bool outgoing) {
        for (const auto& [u, w] : f.source.arrows())
            if ((outgoing ? u : w) == v && f.image[u] == f.image[w]) return true;
        return false;
    };
    std::vector<TheorySpec> specs{TheorySpec::primitive()};
    if (!collapses(a, true) && !collapses(b, false)) specs.push_back(TheorySpec::cluster(a, b));
    if (!collapses(a, true)) specs.push_back(TheorySpec::tail(a));
    if (!collapses(b, false)) specs.push_back(TheorySpec::head(b));
    for (const auto& spec : specs) {
        try {
            induced_homology_map(f, spec, n_max);
        } catch (const Error& e) {
            return theory_name(spec.theory) + ": " + e.what();
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ suite

bool SuiteReport::passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
}

const TheoremResult* SuiteReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

void record(TheoremResult& result, const std::function<CheckResult()>& check, const std::string& context) {
    ++result.checks;
    CheckResult outcome;
    try {
        outcome = check();
    } catch (const std::exception& e) {
        outcome = std::string("exception: ") + e.what();
    }
    if (!outcome) return;
    if (result.failures.size() < 5)
        result.failures.push_back(*outcome + "\n" + context);
    else if (result.failures.size() == 5)
        result.failures.push_back("(further failures omitted)");
}

std::string context_for(std::size_t instance, const Digraph& g) {
    return "instance " + std::to_string(instance) + ":\n" + to_text(g);
}

}  // namespace

SuiteReport run_theorem_suite(const SuiteOptions& options) {
    SuiteReport report;
    if (options.instances == 0) return report;
    const int dim = options.max_dim;
    const std::size_t small = std::max<std::size_t>(2, std::min<std::size_t>(options.max_vertices, 5));
    const auto stream = [&](std::uint64_t k, bool asymmetric, std::size_t max_vertices) {
        return RandomDigraphs({std::min<std::size_t>(2, max_vertices), max_vertices, 0.35, asymmetric,
                               options.seed + 0x9E3779B97F4A7C15ull * k});
    };
    const auto reset = certificate_stats();

    using GraphCheck = std::function<CheckResult(const Digraph&)>;
    struct Family {
        std::string name;
        bool asymmetric;
        std::size_t max_vertices;
        GraphCheck check;
    };
    std::mt19937_64 aux(options.seed ^ 0xA5A5A5A5ull);
    const std::vector<Family> families = {
        {"primitive-equals-path", true, options.max_vertices, [&](const Digraph& g) { return check_primitive_equals_path(g, dim); }},
        {"reversal-primitive", false, options.max_vertices, [&](const Digraph& g) { return check_reversal_primitive(g, dim); }},
        {"reversal-cluster", false, options.max_vertices, [&](const Digraph& g) { return check_reversal_cluster(g, dim); }},
        {"reversal-tail-head", false, options.max_vertices, [&](const Digraph& g) { return check_reversal_tail_head(g, dim); }},
        {"directed-suspension", false, small, [&](const Digraph& g) { return check_directed_suspension_reduced(g, dim + 1); }},
        {"cone-suspension", false, small, [&](const Digraph& g) { return check_cone_suspension(g, dim); }},
        {"endpoint-decomposition", false, options.max_vertices, [&](const Digraph& g) { return check_endpoint_decomposition(g, std::min(dim, 3)); }},
        {"membership-by-components", false, options.max_vertices, [&](const Digraph& g) { return check_membership_by_components(aux, g, std::min(dim, 3)); }},
        {"locality", false, options.max_vertices, [&](const Digraph& g) { return check_locality(g, std::min(dim, 3)); }},
        {"cluster-projection-morphism", false, options.max_vertices, [&](const Digraph& g) { return check_cluster_projection_morphism(g, dim); }},
        {"oracle-betti", false, options.max_vertices, [&](const Digraph& g) { return check_oracle_betti(g, dim); }},
        {"oracle-pi-rank", false, options.max_vertices, [&](const Digraph& g) { return check_oracle_pi_rank(g, dim); }},
    };
    std::uint64_t k = 0;
    for (const auto& family : families) {
        TheoremResult result{family.name, 0, {}};
        auto gen = stream(++k, family.asymmetric, family.max_vertices);
        for (std::size_t i = 0; i < options.instances; ++i) {
            const Digraph g = gen.next();
            record(result, [&] { return family.check(g); }, context_for(i, g));
        }
        report.results.push_back(std::move(result));
    }

    std::mt19937_64 rng(options.seed + 0x51ED270Bull);
    {
        TheoremResult squares{"differential-squares", 0, {}};
        TheoremResult diagrams{"projection-diagrams", 0, {}};
        for (std::size_t i = 0; i < 10 * options.instances; ++i) {
            record(squares, [&] { return check_differential_squares(rng); }, "random chain " + std::to_string(i));
            if (i % 3 == 0)
                record(diagrams, [&] { return check_projection_diagrams(rng); }, "random chain " + std::to_string(i));
        }
        report.results.push_back(std::move(squares));
        report.results.push_back(std::move(diagrams));
    }
    {
        TheoremResult commutes{"induced-map-commutes", 0, {}};
        TheoremResult functorial{"functoriality", 0, {}};
        for (std::size_t i = 0; i < options.instances; ++i) {
            const auto f = random_map(rng, options.max_vertices, 0.4, false);
            record(commutes, [&] { return check_induced_map_commutes(rng, f); },
                   "map " + std::to_string(i) + " into\n" + to_text(f.target) + "from\n" + to_text(f.source));
            const auto h = random_map(rng, small, 0.4, true);
            record(functorial, [&] { return check_functoriality(rng, h, std::min(dim, 3)); },
                   "map " + std::to_string(i) + " into\n" + to_text(h.target) + "from\n" + to_text(h.source));
        }
        report.results.push_back(std::move(commutes));
        report.results.push_back(std::move(functorial));
    }
    {
        // A symmetric target must be able to break f# d = d f#.
        TheoremResult witness{"symmetric-target-witness", 0, {}};
        record(witness, [] () -> CheckResult {
            const auto g = make_digraph(3, {{0, 1}, {1, 2}});
            const auto h = make_digraph(2, {{0, 1}, {1, 0}});
            const auto f = check_digraph_map(std::vector<VertexIndex>{0, 1, 0}, g, h);
            const Chain w = Chain::of({0, 1, 2});
            if (induced_map(f, boundary(w)) == boundary(induced_map(f, w)))
                return "f# commuted with the boundary on the symmetric target";
            return std::nullopt;
        }, "fixed three-vertex path into the complete digraph on two vertices");
        report.results.push_back(std::move(witness));
    }
    {
        TheoremResult certs{"certificates", 1, {}};
        const auto now = certificate_stats();
        if (now.failures != reset.failures)
            certs.failures.push_back(std::to_string(now.failures - reset.failures) + " normal form certificates failed");
        report.results.push_back(std::move(certs));
    }
    return report;
}

std::string to_string(const SuiteReport& report) {
    std::ostringstream os;
    for (const auto& r : report.results) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
        if (!r.passed()) os << ", " << r.failures.size() << " failure reports";
        os << ")\n";
        for (const auto& f : r.failures) {
            std::istringstream lines(f);
            for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
        }
    }
    return os.str();
}

}  // namespace pathhom
