#include "pathhom/spaces.hpp"

#include "pathhom/error.hpp"

#include <algorithm>

namespace pathhom {

bool PathConstraint::admits(const ElementaryPath& p) const {
    switch (kind) {
        case Kind::Unrestricted: return true;
        case Kind::Cluster: return p.size() >= 2 && p.front() == a && p.back() == b;
        case Kind::Tail: return !p.empty() && p.front() == a;
        case Kind::Head: return !p.empty() && p.back() == a;
    }
    return false;
}

AllowedBasis::AllowedBasis(PathConstraint constraint, int degree, std::vector<ElementaryPath> paths)
    : constraint_(constraint), degree_(degree), paths_(std::move(paths)) {
    std::sort(paths_.begin(), paths_.end());
    paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

std::optional<std::size_t> AllowedBasis::find(const ElementaryPath& p) const {
    auto it = std::lower_bound(paths_.begin(), paths_.end(), p);
    if (it == paths_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - paths_.begin());
}

namespace {

void require_vertex(const Digraph& g, VertexIndex v) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

void extend(const Digraph& g, ElementaryPath& current, std::size_t length, const std::vector<Distance>* to_target,
            bool forward, std::vector<ElementaryPath>& out) {
    if (current.size() == length) {
        out.push_back(current);
        return;
    }
    const auto last = current.back();
    const std::size_t remaining = length - current.size();
    for (auto w : forward ? g.successors(last) : g.predecessors(last)) {
        if (to_target) {
            const auto& d = (*to_target)[w];
            if (!d || *d > remaining - 1) continue;
        }
        current.push_back(w);
        extend(g, current, length, to_target, forward, out);
        current.pop_back();
    }
}

}  // namespace

AllowedBasis allowed_paths(const Digraph& g, int n, PathConstraint constraint) {
    using Kind = PathConstraint::Kind;
    if (constraint.kind != Kind::Unrestricted) require_vertex(g, constraint.a);
    if (constraint.kind == Kind::Cluster) require_vertex(g, constraint.b);
    std::vector<ElementaryPath> paths;
    if (n < 0 || (constraint.kind == Kind::Cluster && n == 0)) return AllowedBasis(constraint, n, {});
    const std::size_t length = static_cast<std::size_t>(n) + 1;
    ElementaryPath current;
    switch (constraint.kind) {
        case Kind::Unrestricted:
            for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
                current = {v};
                extend(g, current, length, nullptr, true, paths);
            }
            break;
        case Kind::Cluster: {
            const auto to_b = distances_to(g, constraint.b);
            if (!to_b[constraint.a] || *to_b[constraint.a] > static_cast<std::size_t>(n)) break;
            current = {constraint.a};
            extend(g, current, length, &to_b, true, paths);
            break;
        }
        case Kind::Tail:
            current = {constraint.a};
            extend(g, current, length, nullptr, true, paths);
            break;
        case Kind::Head:
            current = {constraint.a};
            extend(g, current, length, nullptr, false, paths);
            for (auto& p : paths) std::reverse(p.begin(), p.end());
            break;
    }
    return AllowedBasis(constraint, n, std::move(paths));
}

Chain kind_differential(SubspaceKind kind, const Chain& w) {
    switch (kind) {
        case SubspaceKind::Omega: return regular_boundary(w);
        case SubspaceKind::Pi: return boundary(w);
        case SubspaceKind::ThetaCluster: return cluster_differential(w);
        case SubspaceKind::ThetaTail: return tail_differential(w);
        case SubspaceKind::ThetaHead: return head_differential(w);
    }
    throw Error(ErrorCode::InvalidTheory, "unknown subspace kind");
}

SubspaceBasis::SubspaceBasis(SubspaceKind kind, AllowedBasis ambient, EchelonLattice lattice)
    : kind_(kind), ambient_(std::move(ambient)), lattice_(std::move(lattice)) {
    if (lattice_.ambient_dim() != ambient_.size())
        throw Error(ErrorCode::DimensionMismatch, "lattice and ambient basis sizes differ");
}

Chain SubspaceBasis::generator(std::size_t j) const {
    Chain w(degree());
    for (const auto& [i, c] : lattice_.columns()[j]) w.add(ambient_.path(i), c);
    return w;
}

std::vector<Chain> SubspaceBasis::generators() const {
    std::vector<Chain> out;
    out.reserve(rank());
    for (std::size_t j = 0; j < rank(); ++j) out.push_back(generator(j));
    return out;
}

Matrix SubspaceBasis::coordinate_matrix() const { return lattice_.to_matrix(); }

std::optional<SparseVector> SubspaceBasis::ambient_coordinates(const Chain& w) const {
    if (w.degree() != degree() && !w.is_zero()) return std::nullopt;
    SparseVector v;
    v.reserve(w.size());
    for (const auto& [p, c] : w.terms()) {
        auto i = ambient_.find(p);
        if (!i) return std::nullopt;
        v.emplace_back(*i, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

std::optional<std::vector<Integer>> SubspaceBasis::coordinates(const Chain& w) const {
    auto v = ambient_coordinates(w);
    if (!v) return std::nullopt;
    return lattice_.solve(*v);
}

namespace {

void check_kind(SubspaceKind kind, PathConstraint constraint) {
    using Kind = PathConstraint::Kind;
    const bool ok = (kind == SubspaceKind::ThetaCluster) ? constraint.kind == Kind::Cluster
                    : (kind == SubspaceKind::ThetaTail)  ? constraint.kind == Kind::Tail
                    : (kind == SubspaceKind::ThetaHead)  ? constraint.kind == Kind::Head
                                                         : true;
    if (!ok) throw Error(ErrorCode::InvalidTheory, "subspace kind does not match its path constraint");
}

}  // namespace

RestrictionSystem restriction_system(const Digraph& g, SubspaceKind kind, PathConstraint constraint, int n,
                                     bool blocked) {
    check_kind(kind, constraint);
    RestrictionSystem sys{allowed_paths(g, n, constraint), {}};
    const auto& paths = sys.ambient.paths();
    std::map<EndpointKey, std::size_t> block_of;
    std::vector<std::map<ElementaryPath, std::size_t>> rows;
    std::vector<std::vector<std::pair<std::size_t, std::pair<std::size_t, Integer>>>> entries;  // row, (col, value)
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const EndpointKey key = blocked ? EndpointKey{paths[i].front(), paths[i].back()} : EndpointKey{0, 0};
        auto [it, fresh] = block_of.try_emplace(key, sys.blocks.size());
        if (fresh) {
            sys.blocks.emplace_back();
            rows.emplace_back();
            entries.emplace_back();
        }
        const std::size_t b = it->second;
        const std::size_t col = sys.blocks[b].columns.size();
        sys.blocks[b].columns.push_back(i);
        if (n < 1) continue;
        const Chain image = kind_differential(kind, Chain::of(paths[i]));
        for (const auto& [q, c] : image.terms()) {
            if (is_allowed(g, q)) continue;
            const auto r = rows[b].try_emplace(q, rows[b].size()).first->second;
            entries[b].push_back({r, {col, c}});
        }
    }
    for (std::size_t b = 0; b < sys.blocks.size(); ++b) {
        Matrix m(rows[b].size(), sys.blocks[b].columns.size());
        for (const auto& [r, e] : entries[b]) m(r, e.first) += e.second;
        sys.blocks[b].matrix = std::move(m);
    }
    return sys;
}

SubspaceBasis subspace_basis(const Digraph& g, SubspaceKind kind, PathConstraint constraint, int n, bool blocked) {
    auto sys = restriction_system(g, kind, constraint, n, blocked);
    std::vector<SparseVector> columns;
    for (const auto& block : sys.blocks) {
        if (block.matrix.rows() == 0) {
            for (auto i : block.columns) columns.push_back({{i, Integer(1)}});
            continue;
        }
        const Matrix k = integer_kernel(block.matrix);
        for (auto& col : sparse_columns(k)) {
            for (auto& [i, v] : col) i = block.columns[i];
            columns.push_back(std::move(col));
        }
    }
    std::sort(columns.begin(), columns.end(),
              [](const SparseVector& x, const SparseVector& y) { return x.front().first < y.front().first; });
    const auto dim = sys.ambient.size();
    return SubspaceBasis(kind, std::move(sys.ambient), EchelonLattice(dim, std::move(columns)));
}

SubspaceBasis omega_basis(const Digraph& g, int n, bool blocked) {
    return subspace_basis(g, SubspaceKind::Omega, PathConstraint::unrestricted(), n, blocked);
}

SubspaceBasis pi_basis(const Digraph& g, int n, bool blocked) {
    return subspace_basis(g, SubspaceKind::Pi, PathConstraint::unrestricted(), n, blocked);
}

SubspaceBasis theta_cluster_basis(const Digraph& g, VertexIndex a, VertexIndex b, int n) {
    return subspace_basis(g, SubspaceKind::ThetaCluster, PathConstraint::cluster(a, b), n);
}

SubspaceBasis theta_tail_basis(const Digraph& g, VertexIndex a, int n) {
    return subspace_basis(g, SubspaceKind::ThetaTail, PathConstraint::tail(a), n);
}

SubspaceBasis theta_head_basis(const Digraph& g, VertexIndex b, int n) {
    return subspace_basis(g, SubspaceKind::ThetaHead, PathConstraint::head(b), n);
}

bool pi_membership_by_faces(const Digraph& g, const Chain& w) {
    for (const auto& [p, c] : w.terms())
        if (!is_allowed(g, p)) throw Error(ErrorCode::NotAllowedChain, "chain has a term that is not allowed");
    if (w.degree() < 1) return true;
    for (int m = 0; m <= w.degree(); ++m) {
        const Chain f = face_chain(static_cast<std::size_t>(m), w);
        for (const auto& [q, c] : f.terms())
            if (!is_allowed(g, q)) return false;
    }
    return true;
}

Matrix coordinates_in(const std::vector<Chain>& chains, const AllowedBasis& basis) {
    Matrix out(basis.size(), chains.size());
    for (std::size_t j = 0; j < chains.size(); ++j)
        for (const auto& [p, c] : chains[j].terms()) {
            auto i = basis.find(p);
            if (!i) throw Error(ErrorCode::NotAllowedChain, "chain term outside the ambient basis");
            out(*i, j) = c;
        }
    return out;
}

namespace {

Matrix nonzero_hermite(const Matrix& x) {
    const auto d = hnf(x);
    return column_block(d.hermite, 0, d.rank());
}

}  // namespace

bool same_lattice(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows()) return false;
    return nonzero_hermite(x) == nonzero_hermite(y);
}

Matrix lattice_intersection(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows()) throw Error(ErrorCode::DimensionMismatch, "lattices live in different spaces");
    Matrix joint(x.rows(), x.cols() + y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) joint(r, c) = x(r, c);
        for (std::size_t c = 0; c < y.cols(); ++c) joint(r, x.cols() + c) = -y(r, c);
    }
    const Matrix k = integer_kernel(joint);
    Matrix top(x.cols(), k.cols());
    for (std::size_t r = 0; r < x.cols(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c) top(r, c) = k(r, c);
    return nonzero_hermite(x * top);
}

bool is_saturated(const SubspaceBasis& basis) {
    if (basis.rank() == 0) return true;
    return is_saturated(basis.coordinate_matrix());
}

std::vector<std::pair<PathConstraint, SubspaceBasis>> split_basis_by_endpoints(const SubspaceBasis& basis,
                                                                              Grading grading) {
    if (basis.kind() != SubspaceKind::Omega && basis.kind() != SubspaceKind::Pi)
        throw Error(ErrorCode::InvalidTheory, "only Omega and Pi bases are graded by endpoints");
    const auto& ambient = basis.ambient();
    std::vector<PathConstraint> keys;
    for (const auto& p : ambient.paths()) {
        PathConstraint c = grading == Grading::Endpoints ? PathConstraint::cluster(p.front(), p.back())
                           : grading == Grading::Tail    ? PathConstraint::tail(p.front())
                                                         : PathConstraint::head(p.back());
        if (std::find(keys.begin(), keys.end(), c) == keys.end()) keys.push_back(c);
    }
    if (grading == Grading::Endpoints && basis.degree() == 0) {
        // Degree-zero paths have tail = head; the pieces are indexed by that vertex.
        for (auto& k : keys) k = PathConstraint::tail(k.a);
    }
    const Matrix k = basis.coordinate_matrix();
    std::vector<std::pair<PathConstraint, SubspaceBasis>> out;
    for (const auto& key : keys) {
        // L intersected with the span of admitted paths = K * ker(K restricted to the other rows).
        std::vector<std::size_t> outside, inside;
        for (std::size_t i = 0; i < ambient.size(); ++i) (key.admits(ambient.path(i)) ? inside : outside).push_back(i);
        Matrix rows(outside.size(), k.cols());
        for (std::size_t r = 0; r < outside.size(); ++r)
            for (std::size_t c = 0; c < k.cols(); ++c) rows(r, c) = k(outside[r], c);
        const Matrix coeff = outside.empty() ? Matrix::identity(k.cols()) : integer_kernel(rows);
        const Matrix piece = k * coeff;
        Matrix local(inside.size(), piece.cols());
        for (std::size_t r = 0; r < inside.size(); ++r)
            for (std::size_t c = 0; c < piece.cols(); ++c) local(r, c) = piece(inside[r], c);
        std::vector<ElementaryPath> paths;
        for (auto i : inside) paths.push_back(ambient.path(i));
        AllowedBasis sub(key, basis.degree(), std::move(paths));
        const auto canon = nonzero_hermite(local);
        out.emplace_back(key, SubspaceBasis(basis.kind(), std::move(sub), EchelonLattice(inside.size(), sparse_columns(canon))));
    }
    return out;
}

}  // namespace pathhom
