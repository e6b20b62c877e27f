#pragma once

#include "pathhom/chains.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/linalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pathhom {

struct PathConstraint {
    enum class Kind { Unrestricted, Cluster, Tail, Head };

    Kind kind = Kind::Unrestricted;
    VertexIndex a = 0;  // tail for Cluster/Tail, head for Head
    VertexIndex b = 0;  // head for Cluster

    static PathConstraint unrestricted() { return {}; }
    static PathConstraint cluster(VertexIndex a, VertexIndex b) { return {Kind::Cluster, a, b}; }
    static PathConstraint tail(VertexIndex a) { return {Kind::Tail, a, 0}; }
    static PathConstraint head(VertexIndex b) { return {Kind::Head, b, 0}; }

    bool admits(const ElementaryPath& p) const;

    friend bool operator==(const PathConstraint&, const PathConstraint&) = default;
};

/// Allowed n-paths meeting a constraint, sorted lexicographically. Cluster
/// paths start in degree one; everything is empty below degree zero.
class AllowedBasis {
public:
    AllowedBasis() = default;
    AllowedBasis(PathConstraint constraint, int degree, std::vector<ElementaryPath> paths);

    PathConstraint constraint() const { return constraint_; }
    int degree() const { return degree_; }
    std::size_t size() const { return paths_.size(); }
    const std::vector<ElementaryPath>& paths() const { return paths_; }
    const ElementaryPath& path(std::size_t i) const { return paths_[i]; }
    std::optional<std::size_t> find(const ElementaryPath& p) const;

private:
    PathConstraint constraint_;
    int degree_ = 0;
    std::vector<ElementaryPath> paths_;
};

/// Errors: UnknownVertex.
AllowedBasis allowed_paths(const Digraph& g, int n, PathConstraint constraint);

enum class SubspaceKind { Omega, Pi, ThetaCluster, ThetaTail, ThetaHead };

/// The differential that defines a subspace kind: regular boundary for
/// Omega, boundary for Pi, d / d^t / d^h for the Theta kinds.
Chain kind_differential(SubspaceKind kind, const Chain& w);

/// Integral basis of a submodule of the allowed-path module, stored as the
/// canonical column Hermite basis in ambient coordinates.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(SubspaceKind kind, AllowedBasis ambient, EchelonLattice lattice);

    SubspaceKind kind() const { return kind_; }
    const AllowedBasis& ambient() const { return ambient_; }
    const EchelonLattice& lattice() const { return lattice_; }
    int degree() const { return ambient_.degree(); }
    std::size_t rank() const { return lattice_.rank(); }

    Chain generator(std::size_t j) const;
    std::vector<Chain> generators() const;
    /// ambient.size() x rank.
    Matrix coordinate_matrix() const;

    /// nullopt when some term is not an ambient path.
    std::optional<SparseVector> ambient_coordinates(const Chain& w) const;
    /// Coefficients of w in the generators; nullopt when w is not in the lattice.
    std::optional<std::vector<Integer>> coordinates(const Chain& w) const;
    bool contains(const Chain& w) const { return coordinates(w).has_value(); }

private:
    SubspaceKind kind_ = SubspaceKind::Omega;
    AllowedBasis ambient_;
    EchelonLattice lattice_;
};

/// The linear conditions cutting a subspace out of its ambient: for each
/// block of ambient paths sharing endpoints, the matrix whose rows are the
/// non-allowed terms of the kind's differential. Faces that are not allowed
/// only arise from interior deletions, so blocks never share rows.
struct RestrictionBlock {
    std::vector<std::size_t> columns;  // ambient indices, ascending
    Matrix matrix;                     // rows x columns.size()
};

struct RestrictionSystem {
    AllowedBasis ambient;
    std::vector<RestrictionBlock> blocks;
};

/// With blocked = false a single block holds every ambient path.
RestrictionSystem restriction_system(const Digraph& g, SubspaceKind kind, PathConstraint constraint, int n,
                                     bool blocked = true);

/// Kernel lattice of the restriction system (the general entry point).
SubspaceBasis subspace_basis(const Digraph& g, SubspaceKind kind, PathConstraint constraint, int n,
                             bool blocked = true);

SubspaceBasis omega_basis(const Digraph& g, int n, bool blocked = true);
SubspaceBasis pi_basis(const Digraph& g, int n, bool blocked = true);
SubspaceBasis theta_cluster_basis(const Digraph& g, VertexIndex a, VertexIndex b, int n);
SubspaceBasis theta_tail_basis(const Digraph& g, VertexIndex a, int n);
SubspaceBasis theta_head_basis(const Digraph& g, VertexIndex b, int n);

/// True iff every unsigned face sum of w is allowed. Errors: NotAllowedChain.
bool pi_membership_by_faces(const Digraph& g, const Chain& w);

/// Graded pieces of an Omega or Pi basis: the intersection of its lattice
/// with the chains whose paths meet each constraint. Keys are Cluster
/// constraints for Grading::Endpoints, Tail for Grading::Tail, Head for Grading::Head.
enum class Grading { Endpoints, Tail, Head };
std::vector<std::pair<PathConstraint, SubspaceBasis>> split_basis_by_endpoints(const SubspaceBasis& basis,
                                                                              Grading grading = Grading::Endpoints);

/// Coordinates of the chains in an allowed basis (ambient x chains).
/// Errors: NotAllowedChain when a term is outside the basis.
Matrix coordinates_in(const std::vector<Chain>& chains, const AllowedBasis& basis);
/// Equality of the lattices spanned by the columns.
bool same_lattice(const Matrix& x, const Matrix& y);
/// Columns of a basis for the intersection of two column lattices.
Matrix lattice_intersection(const Matrix& x, const Matrix& y);
/// Smith invariants of the coordinate matrix are all one.
bool is_saturated(const SubspaceBasis& basis);

}  // namespace pathhom
