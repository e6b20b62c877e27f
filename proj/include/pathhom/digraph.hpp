#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathhom {

using VertexIndex = std::uint32_t;
using Arrow = std::pair<VertexIndex, VertexIndex>;
using LabelArrow = std::pair<std::string, std::string>;

/// Finite simple digraph. Vertices keep their input order; that order is the
/// dense index used everywhere else (path ordering, matrix columns).
class Digraph {
public:
    Digraph() = default;

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexIndex v) const { return labels_[v]; }
    std::optional<VertexIndex> find(std::string_view label) const;
    /// Throws Error(UnknownVertex).
    VertexIndex index_of(std::string_view label) const;

    bool has_arrow(VertexIndex from, VertexIndex to) const { return adjacency_[from * labels_.size() + to]; }
    /// Out- and in-neighbours, ascending by index.
    const std::vector<VertexIndex>& successors(VertexIndex v) const { return out_[v]; }
    const std::vector<VertexIndex>& predecessors(VertexIndex v) const { return in_[v]; }
    /// Arrows in input order.
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::vector<LabelArrow> label_arrows() const;

    /// Same labels in the same order and the same arrow set.
    friend bool operator==(const Digraph& a, const Digraph& b);

    friend Digraph validate_digraph(const std::vector<std::string>&, const std::vector<LabelArrow>&);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexIndex> index_;
    std::vector<Arrow> arrows_;
    std::vector<bool> adjacency_;
    std::vector<std::vector<VertexIndex>> out_;
    std::vector<std::vector<VertexIndex>> in_;
};

/// Errors: EmptyVertexSet, DuplicateVertex, LoopArrow, DuplicateArrow, UnknownEndpoint.
Digraph validate_digraph(const std::vector<std::string>& vertices, const std::vector<LabelArrow>& arrows);
/// Index-based convenience; vertices are labelled "0".."n-1".
Digraph make_digraph(std::size_t n, const std::vector<Arrow>& arrows);

bool is_asymmetric(const Digraph& g);
Digraph inverse_digraph(const Digraph& g);
/// Vertex (g,h) has index g * |V_H| + h and label "(g,h)".
Digraph box_product(const Digraph& g, const Digraph& h);
/// Vertices 0..2^n-1; v -> w iff w sets exactly one bit that is clear in v.
Digraph n_cube(unsigned n);

Digraph cone(const Digraph& g, const std::string& a);
Digraph inv_cone(const Digraph& g, const std::string& a);
Digraph suspension(const Digraph& g, const std::string& a, const std::string& b);
Digraph inv_suspension(const Digraph& g, const std::string& a, const std::string& b);
/// a -> v and v -> b for every old vertex v.
Digraph directed_suspension(const Digraph& g, const std::string& a, const std::string& b);

/// nullopt stands for an infinite distance.
using Distance = std::optional<std::size_t>;
Distance oriented_distance(const Digraph& g, VertexIndex from, VertexIndex to);
/// Distances from v to all vertices (forward) or from all vertices to v (backward).
std::vector<Distance> distances_from(const Digraph& g, VertexIndex v);
std::vector<Distance> distances_to(const Digraph& g, VertexIndex v);

/// Vertices and arrows lying on an allowed path from a to b; nullopt when
/// a != b and b is unreachable from a. Labels and relative order are kept.
std::optional<Digraph> cluster_subgraph(const Digraph& g, VertexIndex a, VertexIndex b);
Digraph tail_subgraph(const Digraph& g, VertexIndex a);
Digraph head_subgraph(const Digraph& g, VertexIndex b);

struct DigraphMap {
    Digraph source;
    Digraph target;
    std::vector<VertexIndex> image;  // indexed by source vertex
    bool homomorphism = false;       // every arrow goes to an arrow
    bool target_asymmetric = false;
};

/// Errors: NotAMap (arrow sent to a non-arrow between distinct vertices, or
/// assignment not total), UnknownVertex.
DigraphMap check_digraph_map(const std::vector<LabelArrow>& assignment, const Digraph& g, const Digraph& h);
DigraphMap check_digraph_map(const std::vector<VertexIndex>& image, const Digraph& g, const Digraph& h);

}  // namespace pathhom
