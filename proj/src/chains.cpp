#include "pathhom/chains.hpp"

#include "pathhom/error.hpp"

#include <sstream>

namespace pathhom {

bool is_regular(const ElementaryPath& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

bool is_allowed(const Digraph& g, const ElementaryPath& p) {
    for (auto v : p)
        if (v >= g.vertex_count()) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (!g.has_arrow(p[i - 1], p[i])) return false;
    return true;
}

Chain::Chain(int degree, std::initializer_list<std::pair<ElementaryPath, long long>> terms) : degree_(degree) {
    for (const auto& [p, c] : terms) add(p, c);
}

Chain Chain::of(const ElementaryPath& p, const Integer& c) {
    Chain w(degree_of(p));
    w.add(p, c);
    return w;
}

Integer Chain::coefficient(const ElementaryPath& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Chain::add(const ElementaryPath& p, const Integer& c) {
    if (degree_of(p) != degree_)
        throw Error(ErrorCode::WrongDegree, "path of degree " + std::to_string(degree_of(p)) +
                                                " added to a chain of degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Chain& Chain::operator+=(const Chain& o) {
    if (o.degree_ != degree_) throw Error(ErrorCode::WrongDegree, "adding chains of different degree");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    if (o.degree_ != degree_) throw Error(ErrorCode::WrongDegree, "subtracting chains of different degree");
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

Chain& Chain::operator*=(const Integer& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

ElementaryPath face(std::size_t m, const ElementaryPath& p) {
    if (p.size() < 2 || m >= p.size())
        throw Error(ErrorCode::IndexOutOfRange, "face index " + std::to_string(m) + " invalid for a path of degree " +
                                                    std::to_string(degree_of(p)));
    ElementaryPath out;
    out.reserve(p.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (i != m) out.push_back(p[i]);
    return out;
}

namespace {

// Signed sum of faces m in [first, last) with sign (-1)^(m - offset).
Chain face_sum(const Chain& w, std::size_t first, std::size_t trim_last, std::size_t offset, bool drop_irregular) {
    Chain out(w.degree() - 1);
    if (w.degree() < 1) return out;
    for (const auto& [p, c] : w.terms()) {
        const std::size_t last = p.size() - trim_last;
        for (std::size_t m = first; m < last; ++m) {
            auto q = face(m, p);
            if (drop_irregular && !is_regular(q)) continue;
            out.add(q, (m - offset) % 2 == 0 ? c : Integer(-c));
        }
    }
    return out;
}

bool same_endpoints(const Chain& w, bool tail, bool head) {
    if (w.is_zero()) return true;
    const auto& first = w.terms().begin()->first;
    for (const auto& [p, c] : w.terms()) {
        if (tail && p.front() != first.front()) return false;
        if (head && p.back() != first.back()) return false;
    }
    return true;
}

}  // namespace

Chain boundary(const Chain& w) {
    if (w.degree() < 1) return Chain(w.degree() - 1);
    return face_sum(w, 0, 0, 0, false);
}

Chain face_chain(std::size_t m, const Chain& w) {
    if (w.degree() < 1 || m > static_cast<std::size_t>(w.degree()))
        throw Error(ErrorCode::IndexOutOfRange, "face index out of range");
    Chain out(w.degree() - 1);
    for (const auto& [p, c] : w.terms()) out.add(face(m, p), c);
    return out;
}

Chain augmented_boundary(const Chain& w) {
    if (w.degree() != 0) return boundary(w);
    Chain out(-1);
    out.add({}, augmentation(w));
    return out;
}

Chain regular_boundary(const Chain& w) {
    for (const auto& [p, c] : w.terms())
        if (!is_regular(p)) throw Error(ErrorCode::IrregularInput, "regular boundary applied to an irregular path");
#ifdef PATHHOM_MUTATE_REGULAR_SIGN
    // Deliberately wrong sign on the last face; only the mutation smoke test builds this.
    Chain out = face_sum(w, 0, 0, 0, true);
    if (w.degree() >= 1)
        for (const auto& [p, c] : w.terms()) {
            const std::size_t m = p.size() - 1;
            auto q = face(m, p);
            if (is_regular(q)) out.add(q, Integer(-2) * (m % 2 == 0 ? c : Integer(-c)));
        }
    return out;
#else
    return face_sum(w, 0, 0, 0, true);
#endif
}

Chain cluster_differential(const Chain& w) {
    if (w.degree() < 1) throw Error(ErrorCode::DegreeZero, "cluster chains start in degree one");
    if (!same_endpoints(w, true, true)) throw Error(ErrorCode::NotClusterChain, "terms have different endpoints");
    return face_sum(w, 1, 1, 1, false);
}

Chain tail_differential(const Chain& w) {
    if (w.degree() < 0 || !same_endpoints(w, true, false))
        throw Error(ErrorCode::NotTailChain, "terms have different tails");
    return face_sum(w, 1, 0, 1, false);
}

Chain head_differential(const Chain& w) {
    if (w.degree() < 0 || !same_endpoints(w, false, true))
        throw Error(ErrorCode::NotHeadChain, "terms have different heads");
    return face_sum(w, 0, 1, 0, false);
}

Chain induced_map(const DigraphMap& f, const Chain& w) {
    Chain out(w.degree());
    for (const auto& [p, c] : w.terms()) {
        ElementaryPath q;
        q.reserve(p.size());
        for (auto v : p) {
            if (v >= f.image.size()) throw Error(ErrorCode::UnknownVertex, "path vertex outside the map's source");
            q.push_back(f.image[v]);
        }
        if (is_regular(q)) out.add(q, c);
    }
    return out;
}

Integer augmentation(const Chain& w) {
    if (w.degree() != 0) throw Error(ErrorCode::WrongDegree, "augmentation is defined on degree zero");
    Integer sum = 0;
    for (const auto& [p, c] : w.terms()) sum += c;
    return sum;
}

std::map<EndpointKey, Chain> decompose_by_endpoints(const Chain& w) {
    std::map<EndpointKey, Chain> out;
    for (const auto& [p, c] : w.terms()) {
        if (p.empty()) continue;
        out.try_emplace({p.front(), p.back()}, w.degree()).first->second.add(p, c);
    }
    return out;
}

std::map<VertexIndex, Chain> decompose_by_tail(const Chain& w) {
    std::map<VertexIndex, Chain> out;
    for (const auto& [p, c] : w.terms())
        if (!p.empty()) out.try_emplace(p.front(), w.degree()).first->second.add(p, c);
    return out;
}

std::map<VertexIndex, Chain> decompose_by_head(const Chain& w) {
    std::map<VertexIndex, Chain> out;
    for (const auto& [p, c] : w.terms())
        if (!p.empty()) out.try_emplace(p.back(), w.degree()).first->second.add(p, c);
    return out;
}

Chain reversal(const Chain& w) {
    Chain out(w.degree());
    const int r = ((w.degree() % 4) + 4) % 4;
    const Integer sign = (r == 0 || r == 3) ? 1 : -1;
    for (const auto& [p, c] : w.terms()) out.add(ElementaryPath(p.rbegin(), p.rend()), sign * c);
    return out;
}

namespace {

Chain strip(const Chain& w, std::size_t front, std::size_t back) {
    Chain out(w.degree() - static_cast<int>(front + back));
    for (const auto& [p, c] : w.terms()) out.add(ElementaryPath(p.begin() + front, p.end() - back), c);
    return out;
}

}  // namespace

Chain cluster_projection(const Chain& w) {
    if (w.degree() == 0) return Chain(-2);
    if (w.degree() < 0) throw Error(ErrorCode::DegreeZero, "cluster chains start in degree one");
    if (!same_endpoints(w, true, true)) throw Error(ErrorCode::NotClusterChain, "terms have different endpoints");
    return strip(w, 1, 1);
}

Chain tail_projection(const Chain& w) {
    if (w.degree() < 0) return Chain(w.degree() - 1);
    if (!same_endpoints(w, true, false)) throw Error(ErrorCode::NotTailChain, "terms have different tails");
    return strip(w, 1, 0);
}

Chain head_projection(const Chain& w) {
    if (w.degree() < 0) return Chain(w.degree() - 1);
    if (!same_endpoints(w, false, true)) throw Error(ErrorCode::NotHeadChain, "terms have different heads");
    return strip(w, 0, 1);
}

namespace {

template <class Name>
std::string render(const Chain& w, Name name) {
    if (w.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : w.terms()) {
        if (!first) os << ' ';
        first = false;
        os << (c < 0 ? '-' : '+') << detail::abs_value(c) << "·e_{";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << name(p[i]);
        os << '}';
    }
    return os.str();
}

}  // namespace

std::string to_string(const Chain& w, const Digraph& g) {
    return render(w, [&](VertexIndex v) -> const std::string& { return g.label(v); });
}

std::string to_string(const Chain& w) {
    return render(w, [](VertexIndex v) { return std::to_string(v); });
}

}  // namespace pathhom
