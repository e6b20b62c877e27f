#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/integer.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pathhom {

/// Vertex sequence e_{i0 ... in}. The empty path (degree -1) stands for the
/// unit of the augmented module in degree -1.
using ElementaryPath = std::vector<VertexIndex>;

inline int degree_of(const ElementaryPath& p) { return static_cast<int>(p.size()) - 1; }

bool is_regular(const ElementaryPath& p);
bool is_allowed(const Digraph& g, const ElementaryPath& p);

/// Finite integral combination of elementary paths of one degree. Terms are
/// ordered lexicographically by vertex index; zero coefficients are never kept.
class Chain {
public:
    using Terms = std::map<ElementaryPath, Integer>;

    explicit Chain(int degree = 0) : degree_(degree) {}
    Chain(int degree, std::initializer_list<std::pair<ElementaryPath, long long>> terms);

    static Chain of(const ElementaryPath& p, const Integer& c = 1);

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Integer coefficient(const ElementaryPath& p) const;

    /// Throws Error(WrongDegree) when p has the wrong length.
    void add(const ElementaryPath& p, const Integer& c);

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain& operator*=(const Integer& c);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(const Integer& c, Chain a) { return a *= c; }
    Chain operator-() const { return Integer(-1) * *this; }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int degree_;
    Terms terms_;
};

/// p with vertex m removed. Errors: IndexOutOfRange.
ElementaryPath face(std::size_t m, const ElementaryPath& p);

/// Alternating sum of all deletions; degree-0 chains go to zero.
Chain boundary(const Chain& w);
/// Unsigned m-th face sum. Errors: IndexOutOfRange.
Chain face_chain(std::size_t m, const Chain& w);
/// As boundary, but degree 0 maps to degree -1 through the augmentation.
Chain augmented_boundary(const Chain& w);
/// boundary with irregular terms dropped. Errors: IrregularInput.
Chain regular_boundary(const Chain& w);
/// Deletes interior vertices only. Errors: NotClusterChain, DegreeZero.
Chain cluster_differential(const Chain& w);
/// Keeps the tail (resp. head) fixed. Errors: NotTailChain / NotHeadChain.
Chain tail_differential(const Chain& w);
Chain head_differential(const Chain& w);

/// f#: images that are regular survive, others vanish.
Chain induced_map(const DigraphMap& f, const Chain& w);

/// Errors: WrongDegree.
Integer augmentation(const Chain& w);

using EndpointKey = std::pair<VertexIndex, VertexIndex>;
std::map<EndpointKey, Chain> decompose_by_endpoints(const Chain& w);
std::map<VertexIndex, Chain> decompose_by_tail(const Chain& w);
std::map<VertexIndex, Chain> decompose_by_head(const Chain& w);

/// Reverses every path with sign +1 for n = 0,3 mod 4 and -1 for n = 1,2 mod 4;
/// commutes with boundary.
Chain reversal(const Chain& w);

/// Strips the fixed endpoints: cluster (both), tail (first vertex), head
/// (last vertex). The single arrow / single vertex goes to the empty path,
/// and the degree below that goes to zero.
/// Errors: NotClusterChain / NotTailChain / NotHeadChain.
Chain cluster_projection(const Chain& w);
Chain tail_projection(const Chain& w);
Chain head_projection(const Chain& w);

/// "+1·e_{0 1 3} -1·e_{0 2 3}" using the digraph's labels; "0" for the zero chain.
std::string to_string(const Chain& w, const Digraph& g);
/// Same with raw vertex indices.
std::string to_string(const Chain& w);

}  // namespace pathhom
