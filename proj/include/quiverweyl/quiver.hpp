#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "quiverweyl/errors.hpp"

namespace qw {

// Dimension vectors, stability parameters and roots are all integer vectors
// indexed by the declared vertex order of the ambient quiver.
using DimVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<long long>>;

inline DimVec unit_vector(std::size_t n, std::size_t i) {
    DimVec e(n, 0);
    e[i] = 1;
    return e;
}

inline DimVec add(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVec sub(const DimVec& a, const DimVec& b) {
    DimVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline DimVec scale(int n, const DimVec& a) {
    DimVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = n * a[i];
    return r;
}

inline bool leq(const DimVec& a, const DimVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_zero(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline bool nonnegative(const DimVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

inline int weight(const DimVec& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline int gcd_entries(const DimVec& a) {
    int g = 0;
    for (int x : a) g = std::gcd(g, x);
    return g;
}

struct Arrow {
    int from = 0;
    int to = 0;
};

inline bool operator==(const Arrow& a, const Arrow& b) {
    return a.from == b.from && a.to == b.to;
}

// A finite directed multigraph. Loops and parallel arrows are permitted and
// arrow order is preserved from input.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t size() const { return vertices.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        throw ValidationError("unknown vertex '" + name + "'");
    }

    int loops_at(int v) const {
        int n = 0;
        for (const auto& a : arrows)
            if (a.from == v && a.to == v) ++n;
        return n;
    }

    // Arrows i -> j, counted with multiplicity.
    int arrow_count(int i, int j) const {
        int n = 0;
        for (const auto& a : arrows)
            if (a.from == i && a.to == j) ++n;
        return n;
    }

    void validate() const {
        std::map<std::string, int> seen;
        for (const auto& v : vertices)
            if (++seen[v] > 1) throw ValidationError("duplicate vertex '" + v + "'");
        for (const auto& a : arrows) {
            if (a.from < 0 || a.from >= static_cast<int>(size()) || a.to < 0 ||
                a.to >= static_cast<int>(size()))
                throw ValidationError("arrow endpoint out of range");
        }
    }
};

// Ringel form and its symmetrization, both exact integer matrices indexed by
// the declared vertex order.
struct CartanData {
    IntMatrix ringel;
    IntMatrix cartan;

    static CartanData from(const Quiver& q) {
        const auto n = q.size();
        CartanData cd;
        cd.ringel.assign(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cd.ringel[i][j] = (i == j ? 1 : 0) -
                                  q.arrow_count(static_cast<int>(i), static_cast<int>(j));
        cd.cartan.assign(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cd.cartan[i][j] = cd.ringel[i][j] + cd.ringel[j][i];
        return cd;
    }

    long long pairing(const DimVec& x, const DimVec& y) const {
        if (x.size() != cartan.size() || y.size() != cartan.size())
            throw ValidationError("cartan_pairing: vector size does not match vertex set");
        long long s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                s += static_cast<long long>(x[i]) * cartan[i][j] * y[j];
        return s;
    }

    // p(a) = 1 - (a,a)/2. The self-pairing is always even since the Cartan
    // diagonal is even and the form is symmetric.
    long long p_value(const DimVec& a) const { return 1 - pairing(a, a) / 2; }
};

struct QuiverSetting {
    Quiver quiver;
    DimVec alpha;
    std::optional<DimVec> theta;
    CartanData cartan;

    static QuiverSetting make(Quiver q, DimVec alpha, std::optional<DimVec> theta = {}) {
        q.validate();
        if (alpha.size() != q.size())
            throw ValidationError("dimension vector size does not match vertex count");
        if (!nonnegative(alpha)) throw ValidationError("dimension vector has a negative entry");
        QuiverSetting s;
        s.cartan = CartanData::from(q);
        s.quiver = std::move(q);
        s.alpha = std::move(alpha);
        s.theta = std::move(theta);
        if (s.theta) {
            if (s.theta->size() != s.quiver.size())
                throw ValidationError("stability parameter size does not match vertex count");
            long long dot = 0;
            for (std::size_t i = 0; i < s.alpha.size(); ++i)
                dot += static_cast<long long>((*s.theta)[i]) * s.alpha[i];
            if (dot != 0) throw ValidationError("stability parameter must satisfy theta . alpha = 0");
        }
        return s;
    }
};

// Adds for each arrow a: i -> j the reversed partner a*: j -> i. Partner
// arrows are interleaved so arrow 2k is unstarred and 2k+1 is its star.
inline Quiver double_quiver(const Quiver& q) {
    Quiver d;
    d.vertices = q.vertices;
    for (const auto& a : q.arrows) {
        d.arrows.push_back(a);
        d.arrows.push_back(Arrow{a.to, a.from});
    }
    return d;
}

// True iff the support of a induces a connected subgraph of the underlying
// undirected graph. The zero vector has no support and counts as disconnected.
inline bool support_connected(const Quiver& q, const DimVec& a) {
    const int n = static_cast<int>(q.size());
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (a[i] > 0) { start = i; break; }
    if (start < 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& ar : q.arrows) {
            int w = -1;
            if (ar.from == v && a[ar.to] > 0) w = ar.to;
            if (ar.to == v && a[ar.from] > 0) w = ar.from;
            if (w >= 0 && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (a[i] > 0 && !seen[i]) return false;
    return true;
}

} // namespace qw
