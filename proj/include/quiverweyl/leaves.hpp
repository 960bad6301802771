#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quiverweyl/kleinian.hpp"
#include "quiverweyl/roots.hpp"

namespace qw {

// The labeled local quiver of a decomposition: one vertex per term, 2 p(b_i)
// loops, -(b_i, b_j) arrows between distinct vertices, vertex multiplicities
// n_i and the roots themselves as labels.
struct LocalQuiver {
    int k = 0;
    std::vector<int> loops;
    std::vector<std::vector<int>> adjacency; // symmetric, loop-free part
    std::vector<int> multiplicities;
    std::vector<Root> labels;

    // Cartan pairing of the local quiver's own simples, reconstructed from
    // loop and arrow counts.
    long long local_pairing(int i, int j) const {
        if (i == j) return 2 - loops[i];
        return -adjacency[i][j];
    }

    long long local_p(const std::vector<int>& v) const {
        long long s = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) s += static_cast<long long>(v[i]) * local_pairing(i, j) * v[j];
        return 1 - s / 2;
    }
};

struct IsotropicDecomposition {
    std::vector<DecompTerm> terms; // one term per local vertex (multiplicity n_i)
    LocalQuiver local;
    AffineType affine;
};

inline LocalQuiver build_local_quiver(const QuiverSetting& s, const std::vector<DecompTerm>& terms) {
    LocalQuiver lq;
    lq.k = static_cast<int>(terms.size());
    lq.loops.resize(lq.k);
    lq.multiplicities.resize(lq.k);
    lq.adjacency.assign(lq.k, std::vector<int>(lq.k, 0));
    for (int i = 0; i < lq.k; ++i) {
        lq.labels.push_back(terms[i].root);
        lq.multiplicities[i] = terms[i].multiplicity;
        long long pi = s.cartan.p_value(terms[i].root.vec);
        lq.loops[i] = static_cast<int>(2 * pi);
        if (lq.loops[i] < 0) throw InternalInconsistency("negative loop count in local quiver");
    }
    for (int i = 0; i < lq.k; ++i)
        for (int j = 0; j < lq.k; ++j) {
            if (i == j) continue;
            long long c = -s.cartan.pairing(terms[i].root.vec, terms[j].root.vec);
            if (c < 0) throw InternalInconsistency("positive Cartan pairing between distinct roots");
            lq.adjacency[i][j] = static_cast<int>(c);
        }
    return lq;
}

// The reduced local quiver (loops dropped) must be isomorphic to a catalog
// affine ADE diagram with multiplicities matching delta. On success the
// p'(alpha') = 1 bookkeeping is asserted as well.
inline std::optional<AffineType> recognize_kleinian(const LocalQuiver& lq) {
    if (lq.k < 2 || lq.k > 9) return std::nullopt;
    for (const auto& d : affine_catalog(lq.k)) {
        auto m = match_diagram(lq.adjacency, lq.multiplicities, d);
        if (!m) continue;
        // For the reduced quiver (loops dropped, diagonal Cartan entry 2) the
        // multiplicity vector must be the radical generator: p''(alpha'') = 1.
        long long s = 0;
        for (int i = 0; i < lq.k; ++i)
            for (int j = 0; j < lq.k; ++j) {
                long long c = (i == j) ? 2 : -lq.adjacency[i][j];
                s += static_cast<long long>(lq.multiplicities[i]) * c * lq.multiplicities[j];
            }
        if (1 - s / 2 != 1)
            throw InternalInconsistency("Kleinian match with p''(alpha'') != 1");
        AffineType t;
        t.letter = d.letter;
        t.index = d.index;
        t.vertex_matching = *m;
        return t;
    }
    return std::nullopt;
}

// theta' = (b_1 . theta, ..., b_k . theta).
inline std::vector<long long> localize_stability(const DimVec& theta,
                                                 const std::vector<DecompTerm>& terms) {
    std::vector<long long> out;
    for (const auto& t : terms) {
        long long s = 0;
        for (std::size_t i = 0; i < theta.size(); ++i)
            s += static_cast<long long>(theta[i]) * t.root.vec[i];
        out.push_back(s);
    }
    return out;
}

enum class StabilityClass { Generic, PseudoGeneric, Degenerate };

// Classify theta against all dimension vectors 0 < b < alpha (the definition
// quantifies over all such vectors, not only roots). Generic means theta . b
// is nonzero for every proper nonzero b <= alpha; in the divisible (2,2)
// case the single exception b = alpha/2 is unavoidable and gives the
// pseudo-generic class.
inline StabilityClass stability_class(const QuiverSetting& s, const DimVec& theta) {
    if (theta.size() != s.alpha.size())
        throw ValidationError("stability parameter size does not match vertex count");
    long long dot = 0;
    for (std::size_t i = 0; i < theta.size(); ++i)
        dot += static_cast<long long>(theta[i]) * s.alpha[i];
    if (dot != 0) throw ValidationError("stability parameter must satisfy theta . alpha = 0");

    const int g = gcd_entries(s.alpha);
    DimVec half(s.alpha.size(), 0);
    bool two_two = false;
    if (g == 2) {
        for (std::size_t i = 0; i < half.size(); ++i) half[i] = s.alpha[i] / 2;
        two_two = (s.cartan.p_value(half) == 2);
    }

    bool exception_seen = false;
    bool degenerate = false;
    DimVec b(s.alpha.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (degenerate) return;
        if (i == b.size()) {
            if (is_zero(b) || b == s.alpha) return;
            long long d = 0;
            for (std::size_t j = 0; j < b.size(); ++j)
                d += static_cast<long long>(theta[j]) * b[j];
            if (d != 0) return;
            if (two_two && b == half) {
                exception_seen = true;
                return;
            }
            degenerate = true;
            return;
        }
        for (int v = 0; v <= s.alpha[i] && !degenerate; ++v) {
            b[i] = v;
            walk(i + 1);
        }
        b[i] = 0;
    };
    walk(0);
    if (degenerate) return StabilityClass::Degenerate;
    if (exception_seen) return StabilityClass::PseudoGeneric;
    return StabilityClass::Generic;
}

enum class ResolutionVerdict { Indivisible, TwoTwo, NoResolution };

inline ResolutionVerdict resolution_verdict(const QuiverSetting& s, const DimVec& component) {
    const int g = gcd_entries(component);
    if (g == 1) return ResolutionVerdict::Indivisible;
    DimVec primitive(component.size());
    for (std::size_t i = 0; i < component.size(); ++i) primitive[i] = component[i] / g;
    if (g == 2 && s.cartan.p_value(primitive) == 2) return ResolutionVerdict::TwoTwo;
    return ResolutionVerdict::NoResolution;
}

// Enumerate the isotropic decompositions of alpha: collections of
// Sigma_{0,0} roots b_i with multiplicities n_i summing to alpha, pairwise
// distinct labels apart from repeated isotropic imaginary roots, whose
// reduced local quiver is an affine ADE diagram with multiplicities delta.
// Bounds k <= 9 and n_i <= 6 come from the affine catalog itself (E~8 has 9
// nodes and max delta entry 6).
inline std::vector<IsotropicDecomposition> enumerate_isotropic_decompositions(
    const QuiverSetting& s, const RootEngine& engine, const DimVec& alpha) {
    std::vector<DimVec> pool;
    for (const auto& r : engine.roots_below(alpha))
        if (engine.in_sigma00(r.vec)) pool.push_back(r.vec);
    std::sort(pool.begin(), pool.end(), [](const DimVec& a, const DimVec& b) {
        int wa = weight(a), wb = weight(b);
        return wa > wb || (wa == wb && a < b);
    });

    std::vector<IsotropicDecomposition> out;
    std::vector<DecompTerm> current;

    std::function<void(DimVec, std::size_t, int)> rec = [&](DimVec remaining, std::size_t idx,
                                                            int vertices) {
        if (vertices > 9) return;
        if (is_zero(remaining)) {
            if (vertices < 2) return;
            LocalQuiver lq = build_local_quiver(s, current);
            auto t = recognize_kleinian(lq);
            if (!t) return;
            long long psum = 0;
            for (const auto& term : current) psum += term.root.p;
            if (s.cartan.p_value(alpha) != 1 + psum)
                throw InternalInconsistency(
                    "isotropic decomposition violates p(alpha) = 1 + sum p(beta_i)");
            for (int i = 0; i < lq.k; ++i)
                for (int j = i + 1; j < lq.k; ++j)
                    if (lq.labels[i].vec == lq.labels[j].vec && lq.labels[i].kind == RootKind::Real)
                        throw InternalInconsistency("repeated real root in isotropic decomposition");
            IsotropicDecomposition iso;
            iso.terms = current;
            iso.local = std::move(lq);
            iso.affine = *t;
            out.push_back(std::move(iso));
            return;
        }
        if (idx == pool.size()) return;
        const DimVec& beta = pool[idx];
        Root r{beta, engine.classify(beta), s.cartan.p_value(beta)};
        const bool isotropic = (s.cartan.pairing(beta, beta) == 0 && r.kind == RootKind::Imaginary);
        const int max_copies = isotropic ? 9 : 1;

        // Pick how many vertices carry this root and with which
        // multiplicities; nonincreasing multiplicities avoid enumerating the
        // same multiset of equal labels twice.
        std::function<void(DimVec, int, int)> choose = [&](DimVec rest, int copies, int max_mult) {
            rec(rest, idx + 1, vertices + copies);
            if (copies >= max_copies) return;
            for (int m = std::min(6, max_mult); m >= 1; --m) {
                DimVec contribution = scale(m, beta);
                if (!leq(contribution, rest)) continue;
                current.push_back(DecompTerm{r, m});
                choose(sub(rest, contribution), copies + 1, m);
                current.pop_back();
            }
        };
        choose(remaining, 0, 6);
    };
    rec(alpha, 0, 0);

    auto key = [](const IsotropicDecomposition& d) {
        std::vector<std::pair<DimVec, int>> v;
        for (const auto& t : d.terms) v.emplace_back(t.root.vec, t.multiplicity);
        std::sort(v.begin(), v.end());
        return v;
    };
    std::sort(out.begin(), out.end(),
              [&](const IsotropicDecomposition& a, const IsotropicDecomposition& b) {
                  return key(a) < key(b);
              });
    return out;
}

} // namespace qw
