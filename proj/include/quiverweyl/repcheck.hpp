#pragma once

#include <vector>

#include "quiverweyl/linalg.hpp"
#include "quiverweyl/quiver.hpp"

namespace qw {

// A representation of a doubled quiver (as produced by double_quiver, where
// arrow 2k is unstarred and 2k+1 is its star): one matrix per arrow, with
// mats[a] mapping the tail space into the head space (shape dims[to] x
// dims[from]).
struct Representation {
    DimVec dims;
    std::vector<QMatrix> mats;

    void validate(const Quiver& doubled) const {
        if (dims.size() != doubled.size())
            throw ValidationError("representation dimension vector size mismatch");
        if (mats.size() != doubled.arrows.size())
            throw ValidationError("representation has wrong number of matrices");
        for (std::size_t a = 0; a < mats.size(); ++a) {
            const auto& ar = doubled.arrows[a];
            if (mats[a].rows != static_cast<std::size_t>(dims[ar.to]) ||
                mats[a].cols != static_cast<std::size_t>(dims[ar.from]))
                throw ValidationError("representation matrix shape mismatch on arrow " +
                                      std::to_string(a));
        }
    }
};

inline bool is_starred(std::size_t arrow_index) { return arrow_index % 2 == 1; }
inline std::size_t partner(std::size_t arrow_index) { return arrow_index ^ 1; }

// mu(rho)_v = sum over unstarred arrows a with head v of rho(a) rho(a*)
// minus sum over unstarred arrows a with tail v of rho(a*) rho(a).
inline std::vector<QMatrix> moment_map(const Quiver& doubled, const Representation& rep) {
    rep.validate(doubled);
    std::vector<QMatrix> mu;
    for (std::size_t v = 0; v < doubled.size(); ++v)
        mu.emplace_back(rep.dims[v], rep.dims[v]);
    for (std::size_t a = 0; a < doubled.arrows.size(); a += 2) {
        const auto& ar = doubled.arrows[a];
        mu[ar.to] = mu[ar.to] + rep.mats[a] * rep.mats[a + 1];
        mu[ar.from] = mu[ar.from] - rep.mats[a + 1] * rep.mats[a];
    }
    return mu;
}

inline bool moment_map_vanishes(const Quiver& doubled, const Representation& rep) {
    for (const auto& m : moment_map(doubled, rep))
        if (!m.is_zero()) return false;
    return true;
}

// dim Hom(M, N): nullity of the intertwiner system N(a) f_{t(a)} = f_{h(a)} M(a)
// over all arrows of the doubled quiver.
inline std::size_t hom_dimension(const Quiver& doubled, const Representation& m,
                                 const Representation& n) {
    m.validate(doubled);
    n.validate(doubled);
    const std::size_t nv = doubled.size();
    std::vector<std::size_t> offset(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(m.dims[v]) * n.dims[v];
    const std::size_t unknowns = offset[nv];
    std::size_t eqs = 0;
    for (const auto& ar : doubled.arrows)
        eqs += static_cast<std::size_t>(m.dims[ar.from]) * n.dims[ar.to];
    QMatrix sys(eqs, unknowns);
    // unknown (v, i, j) = entry f_v[i][j], i < n.dims[v], j < m.dims[v]
    auto var = [&](int v, std::size_t i, std::size_t j) {
        return offset[v] + i * m.dims[v] + j;
    };
    std::size_t row = 0;
    for (std::size_t a = 0; a < doubled.arrows.size(); ++a) {
        const auto& ar = doubled.arrows[a];
        const std::size_t dmf = m.dims[ar.from], dnt = n.dims[ar.to];
        for (std::size_t i = 0; i < dnt; ++i)
            for (std::size_t j = 0; j < dmf; ++j) {
                // (N(a) f_{from} - f_{to} M(a))[i][j] = 0
                for (std::size_t l = 0; l < static_cast<std::size_t>(n.dims[ar.from]); ++l)
                    sys(row, var(ar.from, l, j)) += n.mats[a](i, l);
                for (std::size_t l = 0; l < static_cast<std::size_t>(m.dims[ar.to]); ++l)
                    sys(row, var(ar.to, i, l)) -= m.mats[a](l, j);
                ++row;
            }
    }
    return nullity(sys);
}

// dim Ext^1(M, N) = hom(M, N) + hom(N, M) - (dim M, dim N) with respect to
// the symmetrized form of the underlying (undoubled) quiver.
inline long long ext1_dimension(const Quiver& doubled, const CartanData& base_cartan,
                                const Representation& m, const Representation& n) {
    long long e = static_cast<long long>(hom_dimension(doubled, m, n)) +
                  static_cast<long long>(hom_dimension(doubled, n, m)) -
                  base_cartan.pairing(m.dims, n.dims);
    if (e < 0) throw InternalInconsistency("negative Ext^1 dimension");
    return e;
}

// The v-component of the socle: intersection of the kernels of all matrices
// on arrows leaving v. Returns its dimension.
inline std::size_t socle_vertex_dimension(const Quiver& doubled, const Representation& rep, int v) {
    rep.validate(doubled);
    std::size_t total_rows = 0;
    for (std::size_t a = 0; a < doubled.arrows.size(); ++a)
        if (doubled.arrows[a].from == v) total_rows += rep.mats[a].rows;
    QMatrix stacked(total_rows, rep.dims[v]);
    std::size_t row = 0;
    for (std::size_t a = 0; a < doubled.arrows.size(); ++a) {
        if (doubled.arrows[a].from != v) continue;
        for (std::size_t i = 0; i < rep.mats[a].rows; ++i, ++row)
            for (std::size_t j = 0; j < rep.mats[a].cols; ++j) stacked(row, j) = rep.mats[a](i, j);
    }
    if (total_rows == 0) return rep.dims[v];
    return nullity(stacked);
}

// The socle dimension vector: kernel components at every vertex.
inline DimVec socle_dims(const Quiver& doubled, const Representation& rep) {
    DimVec out(doubled.size());
    for (std::size_t v = 0; v < doubled.size(); ++v)
        out[v] = static_cast<int>(socle_vertex_dimension(doubled, rep, static_cast<int>(v)));
    return out;
}

inline long long theta_pairing(const DimVec& theta, const DimVec& dims) {
    long long s = 0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        s += static_cast<long long>(theta[i]) * dims[i];
    return s;
}

// Subspaces are given per vertex as a matrix whose columns span the subspace.
// The collection is a subrepresentation iff every arrow matrix maps the tail
// subspace into the head subspace.
inline bool is_subrepresentation(const Quiver& doubled, const Representation& rep,
                                 const std::vector<QMatrix>& subspaces) {
    rep.validate(doubled);
    if (subspaces.size() != doubled.size())
        throw ValidationError("subspace collection size mismatch");
    for (std::size_t v = 0; v < subspaces.size(); ++v)
        if (subspaces[v].rows != static_cast<std::size_t>(rep.dims[v]))
            throw ValidationError("subspace ambient dimension mismatch at vertex " +
                                  std::to_string(v));
    for (std::size_t a = 0; a < doubled.arrows.size(); ++a) {
        const auto& ar = doubled.arrows[a];
        const QMatrix& u = subspaces[ar.to];
        QMatrix image = rep.mats[a] * subspaces[ar.from];
        // image columns must lie in the span of u's columns
        QMatrix joint(u.rows, u.cols + image.cols);
        for (std::size_t i = 0; i < u.rows; ++i) {
            for (std::size_t j = 0; j < u.cols; ++j) joint(i, j) = u(i, j);
            for (std::size_t j = 0; j < image.cols; ++j) joint(i, u.cols + j) = image(i, j);
        }
        if (rank(joint) != rank(u)) return false;
    }
    return true;
}

// A vertex-and-arrow permutation of the doubled quiver: arrow a: i -> j must
// map to an arrow sigma(a): sigma(i) -> sigma(j).
struct QuiverAutomorphism {
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;

    void validate(const Quiver& doubled) const {
        const int nv = static_cast<int>(doubled.size());
        const int na = static_cast<int>(doubled.arrows.size());
        std::vector<char> vseen(nv, 0), aseen(na, 0);
        if (static_cast<int>(vertex_map.size()) != nv ||
            static_cast<int>(arrow_map.size()) != na)
            throw ValidationError("automorphism size mismatch");
        for (int v : vertex_map) {
            if (v < 0 || v >= nv || vseen[v]) throw ValidationError("vertex map is not a bijection");
            vseen[v] = 1;
        }
        for (int a = 0; a < na; ++a) {
            int b = arrow_map[a];
            if (b < 0 || b >= na || aseen[b]) throw ValidationError("arrow map is not a bijection");
            aseen[b] = 1;
            if (doubled.arrows[b].from != vertex_map[doubled.arrows[a].from] ||
                doubled.arrows[b].to != vertex_map[doubled.arrows[a].to])
                throw ValidationError("arrow map is incompatible with the vertex map");
        }
    }
};

// Flip a representation along sigma: the matrix on arrow a becomes
// +/- rho(sigma^{-1}(a)), with sign -1 exactly when one of a, sigma^{-1}(a)
// is starred and the other is not.
inline Representation flip_representation(const Quiver& doubled, const QuiverAutomorphism& sigma,
                                          const Representation& rep) {
    rep.validate(doubled);
    sigma.validate(doubled);
    for (std::size_t v = 0; v < doubled.size(); ++v)
        if (rep.dims[sigma.vertex_map[v]] != rep.dims[v])
            throw ValidationError("flip requires a dimension-preserving automorphism");
    std::vector<int> inverse(sigma.arrow_map.size());
    for (std::size_t a = 0; a < sigma.arrow_map.size(); ++a) inverse[sigma.arrow_map[a]] = static_cast<int>(a);
    Representation out;
    out.dims = rep.dims;
    out.mats.resize(rep.mats.size());
    for (std::size_t a = 0; a < rep.mats.size(); ++a) {
        std::size_t pre = static_cast<std::size_t>(inverse[a]);
        QMatrix m = rep.mats[pre];
        if (is_starred(a) != is_starred(pre)) m = -m;
        out.mats[a] = std::move(m);
    }
    out.validate(doubled);
    return out;
}

// The one-dimensional representation supported at a single vertex.
inline Representation vertex_simple(const Quiver& doubled, int v) {
    Representation r;
    r.dims.assign(doubled.size(), 0);
    r.dims[v] = 1;
    for (const auto& ar : doubled.arrows)
        r.mats.emplace_back(ar.to == v ? 1 : 0, ar.from == v ? 1 : 0);
    return r;
}

} // namespace qw
