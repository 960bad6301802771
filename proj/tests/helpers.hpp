#pragma once

#include <random>
#include <string>
#include <vector>

#include "quiverweyl/analysis.hpp"

namespace qwt {

using namespace qw;

inline Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows) {
    Quiver q;
    for (int i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i));
    for (auto [f, t] : arrows) q.arrows.push_back(Arrow{f, t});
    return q;
}

inline QuiverSetting make_setting(int n, std::vector<std::pair<int, int>> arrows, DimVec alpha,
                                  std::optional<DimVec> theta = std::nullopt) {
    return QuiverSetting::make(make_quiver(n, std::move(arrows)), std::move(alpha),
                               std::move(theta));
}

// Three vertices 1 - 2 - 3 with a loop at the middle vertex.
inline QuiverSetting triple_with_loop(std::optional<DimVec> theta = DimVec{-1, -1, 3}) {
    return make_setting(3, {{0, 1}, {1, 2}, {1, 1}}, {1, 2, 1}, std::move(theta));
}

// Affine ADE quivers with dimension vector delta.
inline QuiverSetting kleinian_cycle(int n) { // A~(n-1): n-cycle
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < n; ++i) arrows.emplace_back(i, (i + 1) % n);
    return make_setting(n, std::move(arrows), DimVec(n, 1));
}

inline QuiverSetting kleinian_d4() {
    return make_setting(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, {1, 1, 1, 1, 2});
}

inline QuiverSetting kleinian_dn(int n) { // D~n, n >= 4: n+1 vertices
    // outer 0,1 -> 2; chain 2..n-2; n-2 -> outer n-1, n
    std::vector<std::pair<int, int>> arrows{{0, 2}, {1, 2}};
    for (int i = 2; i + 1 <= n - 2; ++i) arrows.emplace_back(i, i + 1);
    arrows.emplace_back(n - 2, n - 1);
    arrows.emplace_back(n - 2, n);
    DimVec alpha(n + 1, 2);
    alpha[0] = alpha[1] = alpha[n - 1] = alpha[n] = 1;
    return make_setting(n + 1, std::move(arrows), std::move(alpha));
}

inline QuiverSetting kleinian_e6() {
    // center 0, three arms (1,2), (3,4), (5,6) pointing inward
    return make_setting(7, {{1, 0}, {2, 1}, {3, 0}, {4, 3}, {5, 0}, {6, 5}},
                        {3, 2, 1, 2, 1, 2, 1});
}

inline QuiverSetting jordan(int loops, int dim) {
    std::vector<std::pair<int, int>> arrows(loops, {0, 0});
    return make_setting(1, std::move(arrows), {dim});
}

// Deterministic random quiver settings for property checks.
inline QuiverSetting random_setting(std::mt19937& rng, int min_vertices, int max_vertices,
                                    int max_arrows, int max_total_dim) {
    std::uniform_int_distribution<int> nv(min_vertices, max_vertices);
    int n = nv(rng);
    std::uniform_int_distribution<int> na(1, max_arrows);
    std::uniform_int_distribution<int> vtx(0, n - 1);
    std::vector<std::pair<int, int>> arrows;
    int arrow_count = na(rng);
    for (int i = 0; i < arrow_count; ++i) arrows.emplace_back(vtx(rng), vtx(rng));
    DimVec alpha(n, 0);
    for (;;) {
        int total = 0;
        for (int i = 0; i < n; ++i) {
            std::uniform_int_distribution<int> d(0, 2);
            alpha[i] = d(rng);
            total += alpha[i];
        }
        if (total > 0 && total <= max_total_dim) break;
    }
    return make_setting(n, arrows, alpha);
}

} // namespace qwt
