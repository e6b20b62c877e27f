#pragma once

#include "pathhom/chains.hpp"
#include "pathhom/digraph.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/ring.hpp"
#include "pathhom/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pathhom {

enum class Theory { PathGLMY, Primitive, ClusterPrimitive, TailPrimitive, HeadPrimitive };

std::string theory_name(Theory t);  // path, primitive, cluster, tail, head
/// Errors: InvalidTheory.
Theory parse_theory(const std::string& name);

struct TheorySpec {
    Theory theory = Theory::Primitive;
    VertexIndex a = 0;  // tail for cluster/tail
    VertexIndex b = 0;  // head for cluster/head
    bool reduced = false;
    Ring ring = Ring::integers();

    static TheorySpec path() { return {Theory::PathGLMY}; }
    static TheorySpec primitive() { return {Theory::Primitive}; }
    static TheorySpec cluster(VertexIndex a, VertexIndex b) { return {Theory::ClusterPrimitive, a, b}; }
    static TheorySpec tail(VertexIndex a) { return {Theory::TailPrimitive, a, 0}; }
    static TheorySpec head(VertexIndex b) { return {Theory::HeadPrimitive, 0, b}; }

    TheorySpec with_ring(Ring r) const;
    TheorySpec with_reduced(bool r) const;

    SubspaceKind kind() const;
    PathConstraint constraint() const;
};

struct HomologyGroup {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string to_string(const HomologyGroup& h);

/// Integral chain complex: bases in degrees 0..n_max+1 and D_n from degree n
/// to n-1. D_0 is empty, or the augmentation row when the spec is reduced.
class ChainComplexRep {
public:
    const TheorySpec& spec() const { return spec_; }
    const Digraph& digraph() const { return graph_; }
    int max_degree() const { return n_max_; }

    const SubspaceBasis& basis(int n) const { return bases_.at(static_cast<std::size_t>(n)); }
    std::size_t basis_rank(int n) const { return basis(n).rank(); }
    /// rank(n-1) x rank(n), for 0 <= n <= n_max + 1.
    const Matrix& differential(int n) const { return boundaries_.at(static_cast<std::size_t>(n)); }

    friend ChainComplexRep build_complex(const Digraph&, const TheorySpec&, int);

private:
    TheorySpec spec_;
    Digraph graph_;
    int n_max_ = 0;
    std::vector<SubspaceBasis> bases_;
    std::vector<Matrix> boundaries_;
};

/// Errors: UnknownVertex, InvalidTheory (reduced with cluster/tail/head),
/// InternalConsistency (closure or D D != 0).
ChainComplexRep build_complex(const Digraph& g, const TheorySpec& spec, int n_max);

/// H_n over the spec's ring. Errors: DegreeOutOfRange.
HomologyGroup homology(const ChainComplexRep& rep, int n);
std::vector<HomologyGroup> homology_all(const ChainComplexRep& rep);

/// Homology in degrees 0..n_max computed straight from the spec. Over a
/// prime field the submodules themselves are taken over that field.
std::vector<HomologyGroup> compute_homology(const Digraph& g, const TheorySpec& spec, int n_max);

std::vector<HomologyGroup> path_homology(const Digraph& g, int n_max, Ring ring = Ring::integers());
/// Errors: InvalidTheory unless theory is PathGLMY or Primitive.
std::vector<HomologyGroup> reduced_homology(const Digraph& g, Theory theory, int n_max, Ring ring = Ring::integers());

/// Per-degree summary used by reports.
struct DegreeSummary {
    HomologyGroup group;
    std::size_t basis_rank = 0;
    std::size_t boundary_rank = 0;  // rank of D_n

    friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

std::vector<DegreeSummary> summarize(const Digraph& g, const TheorySpec& spec, int n_max);

/// Degreewise comparison of cluster homology of the directed suspension with
/// primitive homology of G, in both the unreduced and reduced form.
struct SuspensionDegree {
    int n = 0;
    std::size_t theta_rank = 0;        // rank Theta_n^{[a,b]}(S^d G)
    std::size_t pi_rank = 0;           // rank Pi_{n-2}(G)
    std::size_t projected_rank = 0;    // rank of pi(Theta_n) inside Pi_{n-2}(G)
    bool projection_lands = true;      // pi(Theta_n) inside Pi_{n-2}(G)
    bool projection_commutes = true;   // pi d = d pi (augmented in degree 0)
    HomologyGroup cluster;             // H_n^{[a,b]}(S^d G)
    HomologyGroup unreduced;           // H_{n-2}(G)
    HomologyGroup reduced;             // reduced H_{n-2}(G)
};

struct SuspensionReport {
    Digraph suspended;
    std::vector<SuspensionDegree> degrees;  // n = 2..n_max

    bool unreduced_holds() const;  // H_n^{[a,b]} = H_{n-2} and rank equality in every degree
    bool reduced_holds() const;    // H_n^{[a,b]} = reduced H_{n-2}
};

SuspensionReport suspension_isomorphism_check(const Digraph& g, const std::string& a, const std::string& b, int n_max);

/// Matrix of the map induced by f on the free part of H_n, in the bases of
/// free generators chosen by the Smith form. Errors: NotAsymmetric,
/// ChainMapViolation, InvalidTheory.
struct InducedMap {
    Matrix matrix;  // betti(target) x betti(source)
    HomologyGroup source;
    HomologyGroup target;
};

InducedMap induced_homology_map(const DigraphMap& f, const TheorySpec& spec, int n);

/// The target spec of f for a source spec (endpoints move to their images).
TheorySpec image_spec(const DigraphMap& f, const TheorySpec& spec);

}  // namespace pathhom
