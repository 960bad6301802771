#pragma once

#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quiverweyl/errors.hpp"
#include "quiverweyl/quiver.hpp"

namespace qw {

// Affine ADE diagram as an undirected multigraph with its delta vector.
struct AffineDiagram {
    char letter = 'A';
    int index = 0; // A_n, D_n, E_6/7/8 (extended)
    std::vector<std::vector<int>> adj; // symmetric edge multiplicities
    std::vector<int> delta;

    std::size_t size() const { return delta.size(); }
    std::string name() const { return std::string(1, letter) + "~" + std::to_string(index); }
};

struct AffineType {
    char letter = 'A';
    int index = 0;
    std::vector<int> vertex_matching; // local-quiver vertex -> catalog node

    std::string name() const { return std::string(1, letter) + "~" + std::to_string(index); }
};

namespace detail {

inline AffineDiagram make_diagram(char letter, int index, std::size_t k) {
    AffineDiagram d;
    d.letter = letter;
    d.index = index;
    d.adj.assign(k, std::vector<int>(k, 0));
    d.delta.assign(k, 1);
    return d;
}

inline void link(AffineDiagram& d, int i, int j, int mult = 1) {
    d.adj[i][j] += mult;
    d.adj[j][i] += mult;
}

} // namespace detail

// The static affine ADE catalog: cycles A~n (A~1 is the double edge), forked
// chains D~n, and the three extended E diagrams with their standard delta
// marks.
inline std::vector<AffineDiagram> affine_catalog(std::size_t vertex_count) {
    std::vector<AffineDiagram> out;
    const int k = static_cast<int>(vertex_count);
    if (k == 2) {
        auto d = detail::make_diagram('A', 1, 2);
        detail::link(d, 0, 1, 2);
        out.push_back(d);
    }
    if (k >= 3) { // A~_{k-1} cycle
        auto d = detail::make_diagram('A', k - 1, vertex_count);
        for (int i = 0; i < k; ++i) detail::link(d, i, (i + 1) % k);
        out.push_back(d);
    }
    if (k >= 5) { // D~_{k-1}: chain 0..k-3 forks not needed; build explicitly
        // nodes: outer 0,1 - chain 2..k-3 - outer k-2,k-1; chain nodes carry 2.
        auto d = detail::make_diagram('D', k - 1, vertex_count);
        detail::link(d, 0, 2);
        detail::link(d, 1, 2);
        for (int i = 2; i + 1 <= k - 3; ++i) detail::link(d, i, i + 1);
        detail::link(d, k - 3, k - 2);
        detail::link(d, k - 3, k - 1);
        for (int i = 2; i <= k - 3; ++i) d.delta[i] = 2;
        out.push_back(d);
    }
    if (k == 7) { // E~6: center 0, arms (1,2), (3,4), (5,6)
        auto d = detail::make_diagram('E', 6, 7);
        d.delta = {3, 2, 1, 2, 1, 2, 1};
        detail::link(d, 0, 1);
        detail::link(d, 1, 2);
        detail::link(d, 0, 3);
        detail::link(d, 3, 4);
        detail::link(d, 0, 5);
        detail::link(d, 5, 6);
        out.push_back(d);
    }
    if (k == 8) { // E~7: chain 0..6 with branch 7 at node 3
        auto d = detail::make_diagram('E', 7, 8);
        d.delta = {1, 2, 3, 4, 3, 2, 1, 2};
        for (int i = 0; i < 6; ++i) detail::link(d, i, i + 1);
        detail::link(d, 3, 7);
        out.push_back(d);
    }
    if (k == 9) { // E~8: chain 0..7 with branch 8 at node 5
        auto d = detail::make_diagram('E', 8, 9);
        d.delta = {1, 2, 3, 4, 5, 6, 4, 2, 3};
        for (int i = 0; i < 7; ++i) detail::link(d, i, i + 1);
        detail::link(d, 5, 8);
        out.push_back(d);
    }
    return out;
}

// Brute-force multigraph isomorphism carrying multiplicities onto delta.
// Diagrams have at most 9 vertices, so permutation search is fine.
inline std::optional<std::vector<int>> match_diagram(const std::vector<std::vector<int>>& adj,
                                                     const std::vector<int>& mult,
                                                     const AffineDiagram& d) {
    const std::size_t k = mult.size();
    if (d.size() != k) return std::nullopt;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> used(k, 0);
    std::vector<int> assign(k, -1);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
        if (v == k) return true;
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            if (mult[v] != d.delta[c]) continue;
            bool ok = true;
            for (std::size_t w = 0; w < v; ++w)
                if (adj[v][w] != d.adj[c][assign[w]]) { ok = false; break; }
            if (!ok) continue;
            used[c] = 1;
            assign[v] = static_cast<int>(c);
            if (rec(v + 1)) return true;
            used[c] = 0;
            assign[v] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return assign;
}

} // namespace qw
