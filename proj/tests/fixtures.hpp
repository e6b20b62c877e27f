#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/homology.hpp"

#include <vector>

namespace fixtures {

using pathhom::Digraph;
using pathhom::make_digraph;

// 0 <-> 1
inline Digraph two_cycle() { return make_digraph(2, {{0, 1}, {1, 0}}); }

inline Digraph three_cycle() { return make_digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Nine vertices, sixteen arrows; the square-free cluster example between 0 and 8.
inline Digraph nine_vertex() {
    return make_digraph(9, {{0, 1}, {0, 8}, {1, 7}, {0, 4}, {4, 7}, {4, 6}, {6, 8}, {5, 8},
                            {7, 8}, {1, 5}, {2, 5}, {3, 6}, {0, 3}, {0, 2}, {2, 8}, {3, 8}});
}

// The three tail examples rooted at 0.
inline Digraph tail_i() { return make_digraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}}); }
inline Digraph tail_ii() { return make_digraph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 3}, {3, 4}}); }
inline Digraph tail_iii() { return make_digraph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {3, 4}, {2, 4}}); }

// Directed suspension of the 3-cycle without a -> 2 and 2 -> b.
inline Digraph suspended_cycle_cut() {
    return pathhom::validate_digraph({"0", "1", "2", "a", "b"}, {{"0", "1"},
                                                                 {"1", "2"},
                                                                 {"2", "0"},
                                                                 {"a", "0"},
                                                                 {"a", "1"},
                                                                 {"0", "b"},
                                                                 {"1", "b"}});
}

inline std::vector<std::size_t> bettis(const std::vector<pathhom::HomologyGroup>& hs) {
    std::vector<std::size_t> out;
    for (const auto& h : hs) out.push_back(h.betti);
    return out;
}

}  // namespace fixtures
