#include "pathhom/homology.hpp"

#include "pathhom/error.hpp"

#include <sstream>

namespace pathhom {

std::string theory_name(Theory t) {
    switch (t) {
        case Theory::PathGLMY: return "path";
        case Theory::Primitive: return "primitive";
        case Theory::ClusterPrimitive: return "cluster";
        case Theory::TailPrimitive: return "tail";
        case Theory::HeadPrimitive: return "head";
    }
    return "?";
}

Theory parse_theory(const std::string& name) {
    for (auto t : {Theory::PathGLMY, Theory::Primitive, Theory::ClusterPrimitive, Theory::TailPrimitive,
                   Theory::HeadPrimitive})
        if (theory_name(t) == name) return t;
    throw Error(ErrorCode::InvalidTheory, "unknown theory '" + name + "'");
}

TheorySpec TheorySpec::with_ring(Ring r) const {
    auto s = *this;
    s.ring = r;
    return s;
}

TheorySpec TheorySpec::with_reduced(bool r) const {
    auto s = *this;
    s.reduced = r;
    return s;
}

SubspaceKind TheorySpec::kind() const {
    switch (theory) {
        case Theory::PathGLMY: return SubspaceKind::Omega;
        case Theory::Primitive: return SubspaceKind::Pi;
        case Theory::ClusterPrimitive: return SubspaceKind::ThetaCluster;
        case Theory::TailPrimitive: return SubspaceKind::ThetaTail;
        case Theory::HeadPrimitive: return SubspaceKind::ThetaHead;
    }
    throw Error(ErrorCode::InvalidTheory, "unknown theory");
}

PathConstraint TheorySpec::constraint() const {
    switch (theory) {
        case Theory::ClusterPrimitive: return PathConstraint::cluster(a, b);
        case Theory::TailPrimitive: return PathConstraint::tail(a);
        case Theory::HeadPrimitive: return PathConstraint::head(b);
        default: return PathConstraint::unrestricted();
    }
}

std::string to_string(const HomologyGroup& h) {
    if (h.betti == 0 && h.torsion.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    if (h.betti > 0) {
        os << "Z";
        if (h.betti > 1) os << '^' << h.betti;
        first = false;
    }
    for (const auto& t : h.torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

namespace {

void validate_spec(const Digraph& g, const TheorySpec& spec) {
    const auto check = [&](VertexIndex v) {
        if (v >= g.vertex_count())
            throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
    };
    switch (spec.theory) {
        case Theory::ClusterPrimitive: check(spec.a); check(spec.b); break;
        case Theory::TailPrimitive: check(spec.a); break;
        case Theory::HeadPrimitive: check(spec.b); break;
        default: break;
    }
    if (spec.reduced && spec.theory != Theory::PathGLMY && spec.theory != Theory::Primitive)
        throw Error(ErrorCode::InvalidTheory, "reduced homology is defined for the path and primitive theories only");
}

void require_degree(int n, int n_max) {
    if (n < 0 || n > n_max)
        throw Error(ErrorCode::DegreeOutOfRange,
                    "degree " + std::to_string(n) + " outside 0.." + std::to_string(n_max));
}

Matrix sparse_to_column_matrix(const std::vector<std::vector<Integer>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
}

HomologyGroup integral_homology(const Matrix& dn, const Matrix& dn1, std::size_t k, int n) {
    HomologyGroup h{n, 0, {}};
    if (k == 0) return h;
    const Matrix kernel = integer_kernel(dn);
    const std::size_t z = kernel.cols();
    if (z == 0) return h;
    const EchelonLattice lattice(k, sparse_columns(kernel));
    Matrix b(z, dn1.cols());
    const auto cols = sparse_columns(dn1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto x = lattice.solve(cols[j]);
        if (!x) throw Error(ErrorCode::InternalConsistency, "boundary image is not a cycle");
        for (std::size_t i = 0; i < z; ++i) b(i, j) = (*x)[i];
    }
    const auto s = snf(b);
    h.betti = z - s.rank();
    for (const auto& f : s.invariant_factors)
        if (f > 1) h.torsion.push_back(f);
    return h;
}

// Submodules and ranks taken directly over a field: the kernel of each
// restriction block over the field, and rank of the differential read off
// the images in ambient coordinates.
struct FieldComplex {
    std::vector<std::size_t> dims;   // degrees 0..n_max+1
    std::vector<std::size_t> ranks;  // rank of D_n, degrees 0..n_max+1
};

FieldComplex field_complex(const Digraph& g, const TheorySpec& spec, int n_max) {
    FieldComplex fc;
    std::vector<std::vector<std::vector<Integer>>> kernels;  // per degree: ambient vectors
    std::vector<AllowedBasis> ambients;
    for (int n = 0; n <= n_max + 1; ++n) {
        auto sys = restriction_system(g, spec.kind(), spec.constraint(), n);
        std::vector<std::vector<Integer>> vecs;
        for (const auto& block : sys.blocks) {
            const Matrix k = block.matrix.rows() == 0 ? Matrix::identity(block.columns.size())
                                                      : field_kernel(block.matrix, spec.ring);
            for (std::size_t j = 0; j < k.cols(); ++j) {
                std::vector<Integer> v(sys.ambient.size(), Integer(0));
                for (std::size_t i = 0; i < k.rows(); ++i) v[block.columns[i]] = k(i, j);
                vecs.push_back(std::move(v));
            }
        }
        fc.dims.push_back(vecs.size());
        kernels.push_back(std::move(vecs));
        ambients.push_back(std::move(sys.ambient));
    }
    for (int n = 0; n <= n_max + 1; ++n) {
        const auto& vecs = kernels[static_cast<std::size_t>(n)];
        const auto& amb = ambients[static_cast<std::size_t>(n)];
        if (n == 0) {
            if (!spec.reduced) {
                fc.ranks.push_back(0);
                continue;
            }
            Matrix row(1, vecs.size());
            for (std::size_t j = 0; j < vecs.size(); ++j)
                for (const auto& v : vecs[j]) row(0, j) += v;
            fc.ranks.push_back(field_rank(row, spec.ring));
            continue;
        }
        const auto& lower = ambients[static_cast<std::size_t>(n - 1)];
        std::vector<std::vector<Integer>> images;
        for (const auto& v : vecs) {
            Chain w(n);
            for (std::size_t i = 0; i < v.size(); ++i) w.add(amb.path(i), v[i]);
            const Chain d = kind_differential(spec.kind(), w);
            std::vector<Integer> col(lower.size(), Integer(0));
            for (const auto& [p, c] : d.terms()) {
                auto i = lower.find(p);
                if (i) {
                    col[*i] = c;
                    continue;
                }
                // Terms outside the lower ambient must vanish over the field.
                const bool vanishes = spec.ring.kind == Ring::Kind::PrimeField
                                          ? (c % Integer(spec.ring.prime)).is_zero()
                                          : c.is_zero();
                if (!vanishes) throw Error(ErrorCode::InternalConsistency, "field submodule not closed");
            }
            images.push_back(std::move(col));
        }
        fc.ranks.push_back(field_rank(sparse_to_column_matrix(images, lower.size()), spec.ring));
    }
    return fc;
}

}  // namespace

ChainComplexRep build_complex(const Digraph& g, const TheorySpec& spec, int n_max) {
    validate_spec(g, spec);
    if (n_max < 0) throw Error(ErrorCode::DegreeOutOfRange, "maximal degree must be nonnegative");
    ChainComplexRep rep;
    rep.spec_ = spec;
    rep.graph_ = g;
    rep.n_max_ = n_max;
    const auto kind = spec.kind();
    for (int n = 0; n <= n_max + 1; ++n) rep.bases_.push_back(subspace_basis(g, kind, spec.constraint(), n));

    const auto& b0 = rep.bases_[0];
    Matrix d0(spec.reduced ? 1 : 0, b0.rank());
    if (spec.reduced)
        for (std::size_t j = 0; j < b0.rank(); ++j) d0(0, j) = augmentation(b0.generator(j));
    rep.boundaries_.push_back(std::move(d0));

    for (int n = 1; n <= n_max + 1; ++n) {
        const auto& upper = rep.bases_[static_cast<std::size_t>(n)];
        const auto& lower = rep.bases_[static_cast<std::size_t>(n - 1)];
        Matrix d(lower.rank(), upper.rank());
        for (std::size_t j = 0; j < upper.rank(); ++j) {
            const Chain image = kind_differential(kind, upper.generator(j));
            auto x = lower.coordinates(image);
            if (!x)
                throw Error(ErrorCode::InternalConsistency,
                            "differential of a degree " + std::to_string(n) + " generator leaves the submodule");
            for (std::size_t i = 0; i < lower.rank(); ++i) d(i, j) = (*x)[i];
        }
        rep.boundaries_.push_back(std::move(d));
    }
    for (int n = 0; n <= n_max; ++n)
        if (!(rep.differential(n) * rep.differential(n + 1)).is_zero())
            throw Error(ErrorCode::InternalConsistency, "D_n D_{n+1} != 0 at n = " + std::to_string(n));
    return rep;
}

HomologyGroup homology(const ChainComplexRep& rep, int n) {
    require_degree(n, rep.max_degree());
    const auto& ring = rep.spec().ring;
    if (ring.kind == Ring::Kind::PrimeField) {
        const auto fc = field_complex(rep.digraph(), rep.spec(), n);
        const auto i = static_cast<std::size_t>(n);
        return {n, fc.dims[i] - fc.ranks[i] - fc.ranks[i + 1], {}};
    }
    const auto& dn = rep.differential(n);
    const auto& dn1 = rep.differential(n + 1);
    if (ring.kind == Ring::Kind::Rationals)
        return {n, rep.basis_rank(n) - rational_rank(dn) - rational_rank(dn1), {}};
    return integral_homology(dn, dn1, rep.basis_rank(n), n);
}

std::vector<HomologyGroup> homology_all(const ChainComplexRep& rep) {
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= rep.max_degree(); ++n) out.push_back(homology(rep, n));
    return out;
}

std::vector<DegreeSummary> summarize(const Digraph& g, const TheorySpec& spec, int n_max) {
    std::vector<DegreeSummary> out;
    if (spec.ring.kind == Ring::Kind::PrimeField) {
        validate_spec(g, spec);
        if (n_max < 0) throw Error(ErrorCode::DegreeOutOfRange, "maximal degree must be nonnegative");
        const auto fc = field_complex(g, spec, n_max);
        for (int n = 0; n <= n_max; ++n) {
            const auto i = static_cast<std::size_t>(n);
            out.push_back({{n, fc.dims[i] - fc.ranks[i] - fc.ranks[i + 1], {}}, fc.dims[i], fc.ranks[i]});
        }
        return out;
    }
    const auto rep = build_complex(g, spec, n_max);
    for (int n = 0; n <= n_max; ++n)
        out.push_back({homology(rep, n), rep.basis_rank(n), rational_rank(rep.differential(n))});
    return out;
}

std::vector<HomologyGroup> compute_homology(const Digraph& g, const TheorySpec& spec, int n_max) {
    std::vector<HomologyGroup> out;
    for (auto& s : summarize(g, spec, n_max)) out.push_back(std::move(s.group));
    return out;
}

std::vector<HomologyGroup> path_homology(const Digraph& g, int n_max, Ring ring) {
    return compute_homology(g, TheorySpec::path().with_ring(ring), n_max);
}

std::vector<HomologyGroup> reduced_homology(const Digraph& g, Theory theory, int n_max, Ring ring) {
    if (theory != Theory::PathGLMY && theory != Theory::Primitive)
        throw Error(ErrorCode::InvalidTheory, "reduced homology is defined for the path and primitive theories only");
    return compute_homology(g, TheorySpec{theory}.with_ring(ring).with_reduced(true), n_max);
}

namespace {

bool same_group(const HomologyGroup& x, const HomologyGroup& y) {
    return x.betti == y.betti && x.torsion == y.torsion;
}

}  // namespace

bool SuspensionReport::unreduced_holds() const {
    for (const auto& d : degrees)
        if (!same_group(d.cluster, d.unreduced) || d.theta_rank != d.pi_rank) return false;
    return true;
}

bool SuspensionReport::reduced_holds() const {
    for (const auto& d : degrees)
        if (!same_group(d.cluster, d.reduced) || !d.projection_lands || !d.projection_commutes) return false;
    return true;
}

SuspensionReport suspension_isomorphism_check(const Digraph& g, const std::string& a, const std::string& b,
                                              int n_max) {
    SuspensionReport report{directed_suspension(g, a, b), {}};
    const auto& s = report.suspended;
    const auto ia = s.index_of(a), ib = s.index_of(b);
    if (n_max < 2) return report;
    const auto cluster = compute_homology(s, TheorySpec::cluster(ia, ib), n_max);
    const auto plain = compute_homology(g, TheorySpec::primitive(), n_max - 2);
    const auto reduced = compute_homology(g, TheorySpec::primitive().with_reduced(true), n_max - 2);
    for (int n = 2; n <= n_max; ++n) {
        SuspensionDegree d;
        d.n = n;
        const auto theta = theta_cluster_basis(s, ia, ib, n);
        const auto pi = pi_basis(g, n - 2);
        d.theta_rank = theta.rank();
        d.pi_rank = pi.rank();
        std::vector<Chain> projected;
        for (const auto& w : theta.generators()) {
            const Chain p = cluster_projection(w);
            if (!pi.contains(p)) d.projection_lands = false;
            if (!(cluster_projection(cluster_differential(w)) == augmented_boundary(p))) d.projection_commutes = false;
            projected.push_back(p);
        }
        d.projected_rank = projected.empty() ? 0 : rational_rank(coordinates_in(projected, pi.ambient()));
        const auto i = static_cast<std::size_t>(n);
        d.cluster = cluster[i];
        d.unreduced = plain[i - 2];
        d.reduced = reduced[i - 2];
        report.degrees.push_back(std::move(d));
    }
    return report;
}

TheorySpec image_spec(const DigraphMap& f, const TheorySpec& spec) {
    auto t = spec;
    if (spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::TailPrimitive) t.a = f.image.at(spec.a);
    if (spec.theory == Theory::ClusterPrimitive || spec.theory == Theory::HeadPrimitive) t.b = f.image.at(spec.b);
    return t;
}

namespace {

// Columns: f# of each source generator in target generator coordinates.
Matrix chain_map_matrix(const DigraphMap& f, const SubspaceBasis& source, const SubspaceBasis& target) {
    Matrix m(target.rank(), source.rank());
    for (std::size_t j = 0; j < source.rank(); ++j) {
        const Chain image = induced_map(f, source.generator(j));
        auto x = target.coordinates(image);
        if (!x)
            throw Error(ErrorCode::ChainMapViolation,
                        "f# sends a degree " + std::to_string(source.degree()) + " generator outside the target submodule");
        for (std::size_t i = 0; i < target.rank(); ++i) m(i, j) = (*x)[i];
    }
    return m;
}

Matrix unimodular_inverse(const Matrix& u) {
    Matrix inv(u.rows(), u.cols());
    for (std::size_t j = 0; j < u.cols(); ++j) {
        std::vector<Integer> e(u.rows(), Integer(0));
        e[j] = 1;
        auto x = integer_solve(u, e);
        if (!x) throw Error(ErrorCode::InternalConsistency, "transform is not unimodular");
        for (std::size_t i = 0; i < u.rows(); ++i) inv(i, j) = (*x)[i];
    }
    return inv;
}

struct CyclePresentation {
    Matrix kernel;      // basis x z
    Matrix left;        // U of the Smith form of the boundary in kernel coordinates
    std::size_t rank;   // rank of that boundary
};

CyclePresentation present(const ChainComplexRep& rep, int n) {
    CyclePresentation p{integer_kernel(rep.differential(n)), {}, 0};
    const std::size_t z = p.kernel.cols();
    const EchelonLattice lattice(rep.basis_rank(n), sparse_columns(p.kernel));
    const auto& dn1 = rep.differential(n + 1);
    Matrix b(z, dn1.cols());
    const auto cols = sparse_columns(dn1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto x = lattice.solve(cols[j]);
        if (!x) throw Error(ErrorCode::InternalConsistency, "boundary image is not a cycle");
        for (std::size_t i = 0; i < z; ++i) b(i, j) = (*x)[i];
    }
    const auto s = snf(b);
    p.left = s.left;
    p.rank = s.rank();
    return p;
}

}  // namespace

InducedMap induced_homology_map(const DigraphMap& f, const TheorySpec& spec, int n) {
    if (!is_asymmetric(f.source) || !f.target_asymmetric)
        throw Error(ErrorCode::NotAsymmetric, "induced maps need asymmetric source and target");
    if (spec.ring.kind != Ring::Kind::Integers || spec.reduced)
        throw Error(ErrorCode::InvalidTheory, "induced maps are computed over Z without augmentation");
    if (n < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree");
    const auto target_spec = image_spec(f, spec);
    const auto src = build_complex(f.source, spec, n);
    const auto tgt = build_complex(f.target, target_spec, n);

    std::vector<Matrix> maps;
    for (int k = 0; k <= n + 1; ++k) maps.push_back(chain_map_matrix(f, src.basis(k), tgt.basis(k)));
    for (int k = 1; k <= n + 1; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        if (!(tgt.differential(k) * maps[ku] == maps[ku - 1] * src.differential(k)))
            throw Error(ErrorCode::ChainMapViolation, "f# does not commute with the differential");
    }

    InducedMap out{Matrix(), homology(src, n), homology(tgt, n)};
    const auto ps = present(src, n);
    const auto pt = present(tgt, n);
    const std::size_t zs = ps.kernel.cols(), zt = pt.kernel.cols();
    out.matrix = Matrix(zt - pt.rank, zs - ps.rank);
    if (out.matrix.empty()) return out;
    const Matrix free_cycles = ps.kernel * unimodular_inverse(ps.left);
    const Matrix images = maps[static_cast<std::size_t>(n)] * free_cycles;
    const EchelonLattice target_cycles(tgt.basis_rank(n), sparse_columns(pt.kernel));
    for (std::size_t j = ps.rank; j < zs; ++j) {
        SparseVector col;
        for (std::size_t i = 0; i < images.rows(); ++i)
            if (!images(i, j).is_zero()) col.emplace_back(i, images(i, j));
        auto x = target_cycles.solve(col);
        if (!x) throw Error(ErrorCode::ChainMapViolation, "image of a cycle is not a cycle");
        for (std::size_t r = pt.rank; r < zt; ++r) {
            Integer y = 0;
            for (std::size_t c = 0; c < zt; ++c) y += pt.left(r, c) * (*x)[c];
            out.matrix(r - pt.rank, j - ps.rank) = y;
        }
    }
    return out;
}

}  // namespace pathhom
