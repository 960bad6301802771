#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiverweyl/repcheck.hpp"

namespace qw {

// A named representation template over a concrete quiver setting. The
// doubled quiver follows the double_quiver convention (even index =
// unstarred arrow, odd index = its star).
struct Fixture {
    std::string name;
    Quiver base;
    Quiver doubled;
    DimVec alpha;
    DimVec theta;
    Representation rep;
};

using Params = std::map<std::string, Rational>;

inline Rational param(const Params& p, const std::string& key, Rational def = 0) {
    auto it = p.find(key);
    return it == p.end() ? def : it->second;
}

namespace detail {

inline QMatrix mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries) {
    QMatrix m(rows, cols);
    m.a = std::move(entries);
    return m;
}

inline QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }

// Column vector (x, y)^T and row vector (x, y).
inline QMatrix col2(Rational x, Rational y) { return mat(2, 1, {x, y}); }
inline QMatrix row2(Rational x, Rational y) { return mat(1, 2, {x, y}); }
inline QMatrix m22(Rational a, Rational b, Rational c, Rational d) { return mat(2, 2, {a, b, c, d}); }

inline Fixture start(std::string name, std::vector<std::string> vertices,
                     std::vector<Arrow> arrows, DimVec alpha, DimVec theta) {
    Fixture f;
    f.name = std::move(name);
    f.base.vertices = std::move(vertices);
    f.base.arrows = std::move(arrows);
    f.doubled = double_quiver(f.base);
    f.alpha = std::move(alpha);
    f.theta = std::move(theta);
    f.rep.dims = f.alpha;
    for (const auto& ar : f.doubled.arrows)
        f.rep.mats.push_back(zero(f.alpha[ar.to], f.alpha[ar.from]));
    return f;
}

// The three-vertex quiver with a loop at the middle vertex, dims (1, 2, 1).
inline Fixture intro_base(const std::string& name) {
    return start(name, {"1", "2", "3"}, {{0, 1}, {1, 2}, {1, 1}}, {1, 2, 1}, {-1, -1, 3});
}

// A 4-cycle of dimension-1 vertices.
inline Fixture cycle4(const std::string& name, DimVec theta) {
    return start(name, {"1", "2", "3", "4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 1, 1, 1},
                 std::move(theta));
}

// Four outer vertices feeding a 2-dimensional center.
inline Fixture star4(const std::string& name, DimVec theta) {
    return start(name, {"a", "b", "c", "d", "z"}, {{0, 4}, {1, 4}, {2, 4}, {3, 4}},
                 {1, 1, 1, 1, 2}, std::move(theta));
}

// Fork - chain of 2-dimensional vertices - fork, n >= 5 vertices total is
// n + 1: a, b, c1..c_{n-3}, h, s (s carries the negative stability weight).
inline Fixture fork_chain(const std::string& name, int n) {
    if (n < 5) throw ValidationError("fork-chain fixtures require n >= 5");
    std::vector<std::string> vs = {"a", "b"};
    const int chain = n - 3;
    for (int i = 1; i <= chain; ++i) vs.push_back("c" + std::to_string(i));
    vs.push_back("h");
    vs.push_back("s");
    const int c0 = 2, h = 2 + chain, s = h + 1;
    std::vector<Arrow> arrows = {{0, c0}, {1, c0}};
    for (int i = 0; i + 1 < chain; ++i) arrows.push_back({c0 + i, c0 + i + 1});
    arrows.push_back({h - 1, h}); // last chain vertex -> fork top
    arrows.push_back({s, h - 1}); // special vertex -> last chain vertex
    DimVec alpha(vs.size(), 2);
    alpha[0] = alpha[1] = alpha[h] = alpha[s] = 1;
    DimVec theta(vs.size(), 1);
    theta[s] = -(2 * n - 3);
    return start(name, std::move(vs), std::move(arrows), std::move(alpha), std::move(theta));
}

} // namespace detail

inline Fixture make_fixture(const std::string& name, const Params& p = {}) {
    using namespace detail;
    const Rational k1 = param(p, "k1"), k1s = param(p, "k1s");
    const Rational k2 = param(p, "k2"), k2s = param(p, "k2s");
    const Rational t = param(p, "t"); // the free parameter marked * in the templates
    const int n = static_cast<int>(param(p, "n", 5).convert_to<long long>());

    if (name == "intro-leaf") {
        Fixture f = intro_base(name);
        f.rep.mats[4] = m22(k1, 0, 0, k2);
        f.rep.mats[5] = m22(k1s, 0, 0, k2s);
        return f;
    }
    if (name == "intro-R1" || name == "A1-intro-R1") {
        Fixture f = intro_base(name);
        f.rep.mats[0] = col2(1, 0);            // 1 -> 2
        f.rep.mats[1] = row2(0, k1s - k2s);    // 2 -> 1
        f.rep.mats[2] = row2(t, 1);            // 2 -> 3
        f.rep.mats[4] = m22(k1, 1, 0, k2);     // loop
        f.rep.mats[5] = m22(k1s, 0, 0, k2s);   // loop star
        return f;
    }
    if (name == "intro-R3" || name == "A1-intro-R3") {
        Fixture f = intro_base(name);
        f.rep.mats[0] = col2(0, 1);
        f.rep.mats[1] = row2(k2s - k1s, 0);
        f.rep.mats[2] = row2(t, 1);
        f.rep.mats[4] = m22(k1, 0, 1, k2);
        f.rep.mats[5] = m22(k1s, 0, 0, k2s);
        return f;
    }

    // Exceptional-fiber families over the 4-cycle, special vertex 1.
    // Doubled arrows: 0/1 = 1<->2, 2/3 = 2<->3, 4/5 = 3<->4, 6/7 = 4<->1.
    if (name == "smooth-A3-1") {
        Fixture f = cycle4(name, {-3, 1, 1, 1});
        f.rep.mats[0] = mat(1, 1, {1}); // 1 -> 2
        f.rep.mats[2] = mat(1, 1, {1}); // 2 -> 3
        f.rep.mats[4] = mat(1, 1, {1}); // 3 -> 4
        f.rep.mats[7] = mat(1, 1, {t}); // 1 -> 4
        return f;
    }
    if (name == "smooth-A3-2") {
        Fixture f = cycle4(name, {-3, 1, 1, 1});
        f.rep.mats[0] = mat(1, 1, {1}); // 1 -> 2
        f.rep.mats[2] = mat(1, 1, {t}); // 2 -> 3
        f.rep.mats[5] = mat(1, 1, {1}); // 4 -> 3
        f.rep.mats[7] = mat(1, 1, {1}); // 1 -> 4
        return f;
    }
    if (name == "smooth-A3-3") {
        Fixture f = cycle4(name, {-3, 1, 1, 1});
        f.rep.mats[0] = mat(1, 1, {1}); // 1 -> 2
        f.rep.mats[3] = mat(1, 1, {t}); // 3 -> 2
        f.rep.mats[5] = mat(1, 1, {1}); // 4 -> 3
        f.rep.mats[7] = mat(1, 1, {1}); // 1 -> 4
        return f;
    }

    // Exceptional-fiber families over the 4-pronged star, special vertex c.
    // Doubled arrows: 0/1 = a<->z, 2/3 = b<->z, 4/5 = c<->z, 6/7 = d<->z.
    const QMatrix e1 = col2(1, 0), e2 = col2(0, 1), pi1 = row2(1, 0);
    if (name == "smooth-D4-1") {
        Fixture f = star4(name, {1, 1, -5, 1, 1});
        f.rep.mats[4] = e1;            // c -> z
        f.rep.mats[3] = row2(1, t);    // z -> b
        f.rep.mats[0] = e2;            // a -> z
        f.rep.mats[1] = pi1;           // z -> a
        f.rep.mats[6] = -e2;           // d -> z
        f.rep.mats[7] = pi1;           // z -> d
        return f;
    }
    if (name == "smooth-D4-2") {
        Fixture f = star4(name, {1, 1, -5, 1, 1});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = e2;            // b -> z
        f.rep.mats[3] = pi1;
        f.rep.mats[1] = row2(1, t);    // z -> a
        f.rep.mats[6] = -e2;
        f.rep.mats[7] = pi1;
        return f;
    }
    if (name == "smooth-D4-3") {
        Fixture f = star4(name, {1, 1, -5, 1, 1});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = e2;
        f.rep.mats[3] = pi1;
        f.rep.mats[0] = -e2;
        f.rep.mats[1] = pi1;
        f.rep.mats[7] = row2(1, t);    // z -> d
        return f;
    }
    if (name == "smooth-D4-4") {
        // Middle family: coefficients on the three non-special prongs sum
        // to zero.
        const Rational ca = param(p, "ca", 1), cb = param(p, "cb", 1);
        const Rational cd = -ca - cb;
        Fixture f = star4(name, {1, 1, -5, 1, 1});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = scale(cb, e2);
        f.rep.mats[3] = pi1;
        f.rep.mats[0] = scale(ca, e2);
        f.rep.mats[1] = pi1;
        f.rep.mats[6] = scale(cd, e2);
        f.rep.mats[7] = pi1;
        return f;
    }

    // Long fork-chain families; vertex s is special. Doubled arrow layout:
    // 0/1 = a<->c1, 2/3 = b<->c1, then the chain pairs, then the last chain
    // vertex <-> h, then s <-> last chain vertex.
    if (name.rfind("smooth-Dn-", 0) == 0) {
        Fixture f = fork_chain(name, n);
        const int chain = n - 3;
        const QMatrix nil = m22(0, 0, 1, 0), id2 = QMatrix::identity(2);
        const std::size_t first_chain_pair = 4;                      // c1 -> c2
        const std::size_t gh = 4 + 2 * (chain - 1);                  // c_{chain} -> h
        const std::size_t sg = gh + 2;                               // s -> c_{chain}
        auto chain_fill = [&](const QMatrix& fwd, const QMatrix& bwd) {
            for (int i = 0; i + 1 < chain; ++i) {
                f.rep.mats[first_chain_pair + 2 * i] = fwd;
                f.rep.mats[first_chain_pair + 2 * i + 1] = bwd;
            }
        };
        if (name == "smooth-Dn-1" || name == "smooth-Dn-2") {
            // Socle at one of the left fork vertices.
            const bool at_a = (name == "smooth-Dn-1");
            f.rep.mats[at_a ? 1 : 3] = row2(1, t);   // c1 -> fork (socle side)
            f.rep.mats[at_a ? 2 : 0] = e2;           // other fork -> c1
            f.rep.mats[at_a ? 3 : 1] = pi1;
            chain_fill(nil, id2);
            f.rep.mats[gh] = pi1;
            f.rep.mats[gh + 1] = e2;
            f.rep.mats[sg] = e1;
            return f;
        }
        if (name == "smooth-Dn-3") {
            // Chain family: fork coefficients t and 1 - t.
            f.rep.mats[0] = scale(t, e2);
            f.rep.mats[1] = pi1;
            f.rep.mats[2] = scale(1 - t, e2);
            f.rep.mats[3] = pi1;
            chain_fill(id2, nil);
            f.rep.mats[gh] = pi1;
            f.rep.mats[gh + 1] = e2;
            f.rep.mats[sg] = e1;
            return f;
        }
        if (name == "smooth-Dn-4") {
            // Socle at the right fork vertex h.
            f.rep.mats[0] = e2;
            f.rep.mats[1] = pi1;
            f.rep.mats[2] = -e2;
            f.rep.mats[3] = pi1;
            chain_fill(m22(0, 0, 0, 1), m22(1, 0, 0, 0));
            f.rep.mats[gh] = row2(1, t);
            f.rep.mats[sg] = e1;
            return f;
        }
    }

    // Partial resolution of the 4-cycle: stability (-1, +1, -1, +1).
    if (name == "partial-A3-family") {
        Fixture f = cycle4(name, {-1, 1, -1, 1});
        f.rep.mats[0] = mat(1, 1, {1}); // 1 -> 2
        f.rep.mats[3] = mat(1, 1, {t}); // 3 -> 2
        f.rep.mats[4] = mat(1, 1, {1}); // 3 -> 4
        f.rep.mats[7] = mat(1, 1, {1}); // 1 -> 4
        return f;
    }
    if (name == "partial-A3-singular-1") {
        Fixture f = cycle4(name, {-1, 1, -1, 1});
        f.rep.mats[0] = mat(1, 1, {1}); // 1 -> 2
        f.rep.mats[4] = mat(1, 1, {1}); // 3 -> 4
        return f;
    }
    if (name == "partial-A3-singular-2") {
        Fixture f = cycle4(name, {-1, 1, -1, 1});
        f.rep.mats[3] = mat(1, 1, {1}); // 3 -> 2
        f.rep.mats[7] = mat(1, 1, {1}); // 1 -> 4
        return f;
    }

    // Partial resolution of the 4-pronged star: stability (-1,-1,-1,-1,+2).
    if (name == "partial-D4-family") {
        const Rational alpha = param(p, "alpha", 2);
        Fixture f = star4(name, {-1, -1, -1, -1, 2});
        f.rep.mats[4] = e1;                  // c -> z
        f.rep.mats[2] = e2;                  // b -> z
        f.rep.mats[0] = e1 + e2;             // a -> z
        f.rep.mats[6] = e1 + scale(alpha, e2); // d -> z
        return f;
    }
    if (name == "partial-D4-singular-1") {
        Fixture f = star4(name, {-1, -1, -1, -1, 2});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = e1;
        f.rep.mats[0] = e2;
        f.rep.mats[6] = e2;
        return f;
    }
    if (name == "partial-D4-singular-2") {
        Fixture f = star4(name, {-1, -1, -1, -1, 2});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = e2;
        f.rep.mats[0] = e1;
        f.rep.mats[6] = e2;
        return f;
    }
    if (name == "partial-D4-singular-3") {
        Fixture f = star4(name, {-1, -1, -1, -1, 2});
        f.rep.mats[4] = e1;
        f.rep.mats[2] = e2;
        f.rep.mats[0] = e2;
        f.rep.mats[6] = e1;
        return f;
    }

    throw ValidationError("unknown fixture '" + name + "'");
}

inline std::vector<std::string> fixture_names() {
    return {
        "intro-leaf",    "intro-R1",       "intro-R3",
        "smooth-A3-1",   "smooth-A3-2",    "smooth-A3-3",
        "smooth-D4-1",   "smooth-D4-2",    "smooth-D4-3",   "smooth-D4-4",
        "smooth-Dn-1",   "smooth-Dn-2",    "smooth-Dn-3",   "smooth-Dn-4",
        "partial-A3-family", "partial-A3-singular-1", "partial-A3-singular-2",
        "partial-D4-family", "partial-D4-singular-1", "partial-D4-singular-2",
        "partial-D4-singular-3",
    };
}

} // namespace qw
