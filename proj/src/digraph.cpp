#include "pathhom/digraph.hpp"

#include "pathhom/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pathhom {

std::optional<VertexIndex> Digraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexIndex Digraph::index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(label) + "'");
}

std::vector<LabelArrow> Digraph::label_arrows() const {
    std::vector<LabelArrow> out;
    out.reserve(arrows_.size());
    for (auto [u, v] : arrows_) out.emplace_back(labels_[u], labels_[v]);
    return out;
}

bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
}

Digraph validate_digraph(const std::vector<std::string>& vertices, const std::vector<LabelArrow>& arrows) {
    Digraph g;
    for (const auto& [t, h] : arrows)
        if (t == h) throw Error(ErrorCode::LoopArrow, "loop arrow at '" + t + "'");
    if (vertices.empty()) throw Error(ErrorCode::EmptyVertexSet, "digraph has no vertices");
    g.labels_ = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!g.index_.emplace(vertices[i], static_cast<VertexIndex>(i)).second)
            throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertices[i] + "' declared twice");
    const std::size_t n = vertices.size();
    g.adjacency_.assign(n * n, false);
    g.out_.assign(n, {});
    g.in_.assign(n, {});
    for (const auto& [t, h] : arrows) {
        auto u = g.find(t), v = g.find(h);
        if (!u || !v)
            throw Error(ErrorCode::UnknownEndpoint, "arrow " + t + " -> " + h + " uses an undeclared vertex");
        if (g.adjacency_[*u * n + *v]) throw Error(ErrorCode::DuplicateArrow, "arrow " + t + " -> " + h + " repeated");
        g.adjacency_[*u * n + *v] = true;
        g.arrows_.emplace_back(*u, *v);
        g.out_[*u].push_back(*v);
        g.in_[*v].push_back(*u);
    }
    for (auto& s : g.out_) std::sort(s.begin(), s.end());
    for (auto& s : g.in_) std::sort(s.begin(), s.end());
    return g;
}

Digraph make_digraph(std::size_t n, const std::vector<Arrow>& arrows) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<LabelArrow> named;
    for (auto [u, v] : arrows) named.emplace_back(std::to_string(u), std::to_string(v));
    return validate_digraph(labels, named);
}

bool is_asymmetric(const Digraph& g) {
    for (auto [u, v] : g.arrows())
        if (g.has_arrow(v, u)) return false;
    return true;
}

Digraph inverse_digraph(const Digraph& g) {
    auto arrows = g.label_arrows();
    for (auto& [t, h] : arrows) std::swap(t, h);
    return validate_digraph(g.labels(), arrows);
}

Digraph box_product(const Digraph& g, const Digraph& h) {
    const std::size_t m = h.vertex_count();
    std::vector<std::string> labels;
    for (const auto& lg : g.labels())
        for (const auto& lh : h.labels()) labels.push_back("(" + lg + "," + lh + ")");
    std::vector<LabelArrow> arrows;
    for (std::size_t x = 0; x < g.vertex_count(); ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const auto& from = labels[x * m + y];
            for (auto w : h.successors(static_cast<VertexIndex>(y))) arrows.emplace_back(from, labels[x * m + w]);
            for (auto w : g.successors(static_cast<VertexIndex>(x))) arrows.emplace_back(from, labels[w * m + y]);
        }
    return validate_digraph(labels, arrows);
}

Digraph n_cube(unsigned n) {
    if (n > 20) throw Error(ErrorCode::IndexOutOfRange, "cube dimension too large");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Arrow> arrows;
    for (std::size_t v = 0; v < count; ++v)
        for (unsigned bit = 0; bit < n; ++bit)
            if (!(v & (std::size_t{1} << bit)))
                arrows.emplace_back(static_cast<VertexIndex>(v), static_cast<VertexIndex>(v | (std::size_t{1} << bit)));
    return make_digraph(count, arrows);
}

namespace {

enum class Direction { Into, OutOf };

// Adds fresh apex vertices, each joined to every old vertex in the given direction.
Digraph add_apexes(const Digraph& g, const std::vector<std::pair<std::string, Direction>>& apexes) {
    auto labels = g.labels();
    auto arrows = g.label_arrows();
    for (std::size_t i = 0; i < apexes.size(); ++i) {
        const auto& name = apexes[i].first;
        if (g.find(name)) throw Error(ErrorCode::LabelCollision, "label '" + name + "' already names a vertex");
        for (std::size_t j = 0; j < i; ++j)
            if (apexes[j].first == name) throw Error(ErrorCode::LabelCollision, "apex labels must differ");
        labels.push_back(name);
    }
    for (const auto& [name, dir] : apexes)
        for (const auto& v : g.labels()) {
            if (dir == Direction::Into)
                arrows.emplace_back(v, name);
            else
                arrows.emplace_back(name, v);
        }
    return validate_digraph(labels, arrows);
}

std::vector<Distance> bfs(const Digraph& g, VertexIndex start, bool forward) {
    std::vector<Distance> dist(g.vertex_count());
    dist[start] = 0;
    std::deque<VertexIndex> queue{start};
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto w : forward ? g.successors(u) : g.predecessors(u)) {
            if (dist[w]) continue;
            dist[w] = *dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

void check_vertex(const Digraph& g, VertexIndex v) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v) + " out of range");
}

// Subgraph made of the kept arrows, their endpoints and the extra vertices.
Digraph arrow_subgraph(const Digraph& g, const std::vector<bool>& keep_arrow, std::vector<VertexIndex> extra) {
    std::vector<bool> keep_vertex(g.vertex_count(), false);
    for (auto v : extra) keep_vertex[v] = true;
    const auto& arrows = g.arrows();
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (keep_arrow[i]) keep_vertex[arrows[i].first] = keep_vertex[arrows[i].second] = true;
    std::vector<std::string> labels;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (keep_vertex[v]) labels.push_back(g.label(v));
    std::vector<LabelArrow> kept;
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (keep_arrow[i]) kept.emplace_back(g.label(arrows[i].first), g.label(arrows[i].second));
    return validate_digraph(labels, kept);
}

}  // namespace

Digraph cone(const Digraph& g, const std::string& a) { return add_apexes(g, {{a, Direction::Into}}); }
Digraph inv_cone(const Digraph& g, const std::string& a) { return add_apexes(g, {{a, Direction::OutOf}}); }

Digraph suspension(const Digraph& g, const std::string& a, const std::string& b) {
    return add_apexes(g, {{a, Direction::Into}, {b, Direction::Into}});
}

Digraph inv_suspension(const Digraph& g, const std::string& a, const std::string& b) {
    return add_apexes(g, {{a, Direction::OutOf}, {b, Direction::OutOf}});
}

Digraph directed_suspension(const Digraph& g, const std::string& a, const std::string& b) {
    return add_apexes(g, {{a, Direction::OutOf}, {b, Direction::Into}});
}

std::vector<Distance> distances_from(const Digraph& g, VertexIndex v) {
    check_vertex(g, v);
    return bfs(g, v, true);
}

std::vector<Distance> distances_to(const Digraph& g, VertexIndex v) {
    check_vertex(g, v);
    return bfs(g, v, false);
}

Distance oriented_distance(const Digraph& g, VertexIndex from, VertexIndex to) {
    check_vertex(g, to);
    return distances_from(g, from)[to];
}

// An arrow u -> v lies on an allowed a -> b path exactly when a reaches u and
// v reaches b: concatenating the two walks with the arrow gives such a path,
// and conversely the prefix and suffix of a path through the arrow are walks.
std::optional<Digraph> cluster_subgraph(const Digraph& g, VertexIndex a, VertexIndex b) {
    const auto from_a = distances_from(g, a);
    const auto to_b = distances_to(g, b);
    if (a != b && !from_a[b]) return std::nullopt;
    std::vector<bool> keep(g.arrow_count());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = from_a[g.arrows()[i].first] && to_b[g.arrows()[i].second];
    return arrow_subgraph(g, keep, {a});
}

Digraph tail_subgraph(const Digraph& g, VertexIndex a) {
    const auto from_a = distances_from(g, a);
    std::vector<bool> keep(g.arrow_count());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = from_a[g.arrows()[i].first].has_value();
    return arrow_subgraph(g, keep, {a});
}

Digraph head_subgraph(const Digraph& g, VertexIndex b) {
    const auto to_b = distances_to(g, b);
    std::vector<bool> keep(g.arrow_count());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = to_b[g.arrows()[i].second].has_value();
    return arrow_subgraph(g, keep, {b});
}

DigraphMap check_digraph_map(const std::vector<VertexIndex>& image, const Digraph& g, const Digraph& h) {
    if (image.size() != g.vertex_count()) throw Error(ErrorCode::NotAMap, "assignment is not total on the source");
    for (auto v : image)
        if (v >= h.vertex_count()) throw Error(ErrorCode::UnknownVertex, "image vertex out of range");
    DigraphMap f{g, h, image, true, is_asymmetric(h)};
    for (auto [u, v] : g.arrows()) {
        const auto fu = image[u], fv = image[v];
        if (fu == fv) {
            f.homomorphism = false;
            continue;
        }
        if (!h.has_arrow(fu, fv))
            throw Error(ErrorCode::NotAMap, "arrow " + g.label(u) + " -> " + g.label(v) + " goes to the non-arrow " +
                                                h.label(fu) + " -> " + h.label(fv));
    }
    return f;
}

DigraphMap check_digraph_map(const std::vector<LabelArrow>& assignment, const Digraph& g, const Digraph& h) {
    std::vector<std::optional<VertexIndex>> partial(g.vertex_count());
    for (const auto& [from, to] : assignment) {
        const auto u = g.index_of(from);
        const auto v = h.index_of(to);
        if (partial[u] && *partial[u] != v) throw Error(ErrorCode::NotAMap, "vertex '" + from + "' assigned twice");
        partial[u] = v;
    }
    std::vector<VertexIndex> image;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        if (!partial[u]) throw Error(ErrorCode::NotAMap, "vertex '" + g.label(u) + "' has no image");
        image.push_back(*partial[u]);
    }
    return check_digraph_map(image, g, h);
}

}  // namespace pathhom
