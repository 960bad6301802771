#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiverweyl/leaves.hpp"

namespace qw {

using boost::multiprecision::cpp_int;

struct CoxeterType {
    char letter = 'A';
    int rank = 1;

    std::string name() const { return std::string(1, letter) + std::to_string(rank); }
    bool operator==(const CoxeterType&) const = default;
    bool operator<(const CoxeterType& o) const {
        return letter < o.letter || (letter == o.letter && rank < o.rank);
    }
};

inline cpp_int factorial(int n) {
    cpp_int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline cpp_int weyl_order(const CoxeterType& t) {
    switch (t.letter) {
        case 'A':
            return factorial(t.rank + 1);
        case 'B':
        case 'C':
            return (cpp_int(1) << t.rank) * factorial(t.rank);
        case 'D':
            return (cpp_int(1) << (t.rank - 1)) * factorial(t.rank);
        case 'G':
            if (t.rank == 2) return 12;
            break;
        case 'F':
            if (t.rank == 4) return 1152;
            break;
        case 'E':
            if (t.rank == 6) return 51840;
            if (t.rank == 7) return 2903040;
            if (t.rank == 8) return cpp_int(696729600);
            break;
    }
    throw InternalInconsistency("unknown Coxeter type " + t.name());
}

// Which label coincidences a leaf exhibits, in terms of the structural
// positions of its affine diagram.
enum class FoldCase {
    None,
    CyclePair,      // A~3: one pair of antipodal labels equal
    CycleTwoPairs,  // A~3: both antipodal pairs equal
    OuterPair,      // D~4: one pair among the four outer labels
    OuterTwoPairs,  // D~4: two disjoint outer pairs
    OuterTriple,    // D~4: three outer labels equal
    OuterQuadruple, // D~4: all four outer labels equal
    EndPair,        // D~n, n >= 5: one fork pair equal
    EndTwoPairs     // D~n, n >= 5: both fork pairs equal
};

inline std::string fold_case_name(FoldCase c) {
    switch (c) {
        case FoldCase::None: return "none";
        case FoldCase::CyclePair: return "cycle-pair";
        case FoldCase::CycleTwoPairs: return "cycle-two-pairs";
        case FoldCase::OuterPair: return "outer-pair";
        case FoldCase::OuterTwoPairs: return "outer-two-pairs";
        case FoldCase::OuterTriple: return "outer-triple";
        case FoldCase::OuterQuadruple: return "outer-quadruple";
        case FoldCase::EndPair: return "end-pair";
        case FoldCase::EndTwoPairs: return "end-two-pairs";
    }
    return "?";
}

struct EqualityPattern {
    FoldCase fold_case = FoldCase::None;
    std::vector<std::vector<int>> classes; // nontrivial label classes (local vertex indices)
};

// Every permutation of equal labels, ignoring the diagram structure: the
// product of symmetric groups on the equal-label classes.
struct NaiveSymmetry {
    std::vector<std::vector<int>> classes; // one per distinct label, in first-occurrence order
    cpp_int order = 1;
};

inline NaiveSymmetry naive_symmetry_group(const LocalQuiver& lq) {
    NaiveSymmetry s;
    std::vector<char> taken(lq.k, 0);
    for (int i = 0; i < lq.k; ++i) {
        if (taken[i]) continue;
        std::vector<int> cls{i};
        taken[i] = 1;
        for (int j = i + 1; j < lq.k; ++j)
            if (!taken[j] && lq.labels[j].vec == lq.labels[i].vec) {
                cls.push_back(j);
                taken[j] = 1;
            }
        s.order *= factorial(static_cast<int>(cls.size()));
        s.classes.push_back(std::move(cls));
    }
    return s;
}

// Automorphisms of the labeled local quiver: vertex permutations preserving
// adjacency, loops, multiplicities and every label.
inline std::vector<std::vector<int>> labeled_automorphism_group(const LocalQuiver& lq) {
    std::vector<int> perm(lq.k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < lq.k && ok; ++i) {
            if (lq.labels[perm[i]].vec != lq.labels[i].vec ||
                lq.multiplicities[perm[i]] != lq.multiplicities[i] ||
                lq.loops[perm[i]] != lq.loops[i])
                ok = false;
            for (int j = 0; j < lq.k && ok; ++j)
                if (lq.adjacency[perm[i]][perm[j]] != lq.adjacency[i][j]) ok = false;
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// The label-permutation count and the labeled automorphism group must agree
// on every local quiver the enumerator produces.
inline void assert_symmetry_groups_agree(const LocalQuiver& lq) {
    if (naive_symmetry_group(lq).order != cpp_int(labeled_automorphism_group(lq).size()))
        throw InternalInconsistency("symmetry group mismatch on local quiver");
}

inline EqualityPattern classify_pattern(const LocalQuiver& lq, const AffineType& affine) {
    assert_symmetry_groups_agree(lq);

    // catalog node -> local vertex
    std::vector<int> inv(lq.k, -1);
    for (int v = 0; v < lq.k; ++v) inv[affine.vertex_matching[v]] = v;

    auto equal = [&](int ca, int cb) { return lq.labels[inv[ca]].vec == lq.labels[inv[cb]].vec; };

    EqualityPattern pat;
    pat.classes = naive_symmetry_group(lq).classes;
    std::size_t nontrivial = 0;
    for (const auto& cls : pat.classes)
        if (cls.size() > 1) ++nontrivial;

    if (affine.letter == 'A') {
        if (affine.index != 3) {
            if (nontrivial > 0)
                throw InternalInconsistency("label coincidence outside the symmetry catalog");
            pat.fold_case = FoldCase::None;
            return pat;
        }
        // 4-cycle 0-1-2-3; coincidences can only be antipodal (adjacent
        // labels are forced distinct by the adjacency/pairing invariant).
        bool p02 = equal(0, 2), p13 = equal(1, 3);
        if (static_cast<std::size_t>(p02) + static_cast<std::size_t>(p13) != nontrivial)
            throw InternalInconsistency("label coincidence outside the symmetry catalog");
        if (p02 && p13) pat.fold_case = FoldCase::CycleTwoPairs;
        else if (p02 || p13) pat.fold_case = FoldCase::CyclePair;
        else pat.fold_case = FoldCase::None;
        return pat;
    }
    if (affine.letter == 'D') {
        const int k = lq.k; // = index + 1
        // No coincidence may involve a chain node.
        for (const auto& cls : pat.classes)
            if (cls.size() > 1)
                for (int v : cls) {
                    int c = affine.vertex_matching[v];
                    if (c >= 2 && c <= k - 3)
                        throw InternalInconsistency("label coincidence on a D~ chain node");
                }
        if (affine.index == 4) {
            // outer catalog nodes 0, 1, 3, 4
            std::map<DimVec, int> counts;
            for (int c : {0, 1, 3, 4}) counts[lq.labels[inv[c]].vec]++;
            std::vector<int> sizes;
            for (auto& [vec, cnt] : counts) sizes.push_back(cnt);
            std::sort(sizes.rbegin(), sizes.rend());
            if (sizes[0] == 4) pat.fold_case = FoldCase::OuterQuadruple;
            else if (sizes[0] == 3) pat.fold_case = FoldCase::OuterTriple;
            else if (sizes[0] == 2 && sizes.size() >= 2 && sizes[1] == 2)
                pat.fold_case = FoldCase::OuterTwoPairs;
            else if (sizes[0] == 2) pat.fold_case = FoldCase::OuterPair;
            else pat.fold_case = FoldCase::None;
            return pat;
        }
        bool left = equal(0, 1), right = equal(k - 2, k - 1);
        if (static_cast<std::size_t>(left) + static_cast<std::size_t>(right) != nontrivial)
            throw InternalInconsistency("label coincidence outside the symmetry catalog");
        if (left && right) pat.fold_case = FoldCase::EndTwoPairs;
        else if (left || right) pat.fold_case = FoldCase::EndPair;
        else pat.fold_case = FoldCase::None;
        return pat;
    }
    if (nontrivial > 0) throw InternalInconsistency("label coincidence on an E~ diagram");
    pat.fold_case = FoldCase::None;
    return pat;
}

// The leaf Weyl type per the folding table.
inline CoxeterType fold(const AffineType& affine, const EqualityPattern& pat) {
    const char L = affine.letter;
    const int n = affine.index;
    switch (pat.fold_case) {
        case FoldCase::None:
            return CoxeterType{L, n};
        case FoldCase::CyclePair:
        case FoldCase::CycleTwoPairs:
            return CoxeterType{'C', 2};
        case FoldCase::OuterPair:
        case FoldCase::OuterTwoPairs:
            return CoxeterType{'B', 3};
        case FoldCase::OuterTriple:
        case FoldCase::OuterQuadruple:
            return CoxeterType{'G', 2};
        case FoldCase::EndPair:
        case FoldCase::EndTwoPairs:
            return CoxeterType{'B', n - 1};
    }
    throw InternalInconsistency("unhandled fold case");
}

inline CoxeterType fold_leaf(const IsotropicDecomposition& iso) {
    return fold(iso.affine, classify_pattern(iso.local, iso.affine));
}

// A finite product of Weyl groups of irreducible types.
struct WeylProduct {
    std::vector<CoxeterType> factors;

    cpp_int order() const {
        cpp_int r = 1;
        for (const auto& f : factors) r *= weyl_order(f);
        return r;
    }
    std::string name() const {
        if (factors.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " x ";
            s += factors[i].name();
        }
        return s;
    }
    void normalize() { std::sort(factors.begin(), factors.end()); }
};

// --- Independent oracle: fixed subgroup of a diagram automorphism ---------

// Cartan matrix of a finite type, simple roots numbered as follows.
//   A_n: chain 0 - 1 - ... - n-1
//   D_n: chain 0 - ... - n-3 forking into n-2 and n-1
inline std::vector<std::vector<long long>> finite_cartan(char letter, int rank) {
    std::vector<std::vector<long long>> a(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;
    auto edge = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    if (letter == 'A') {
        for (int i = 0; i + 1 < rank; ++i) edge(i, i + 1);
        return a;
    }
    if (letter == 'D' && rank >= 3) {
        for (int i = 0; i + 1 < rank - 1; ++i) edge(i, i + 1);
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
        return a;
    }
    throw InternalInconsistency("finite_cartan: unsupported type");
}

// Order of the subgroup of W(letter, rank) commuting with the simple-root
// permutation node_perm. The group is generated as integer matrices acting
// on the root lattice in the simple-root basis; feasible up to rank 5.
inline cpp_int fixed_subgroup_order(char letter, int rank, const std::vector<int>& node_perm) {
    auto cartan = finite_cartan(letter, rank);
    using Mat = std::vector<std::vector<long long>>;
    auto mul = [&](const Mat& x, const Mat& y) {
        Mat r(rank, std::vector<long long>(rank, 0));
        for (int i = 0; i < rank; ++i)
            for (int l = 0; l < rank; ++l) {
                if (x[i][l] == 0) continue;
                for (int j = 0; j < rank; ++j) r[i][j] += x[i][l] * y[l][j];
            }
        return r;
    };
    std::vector<Mat> gens;
    for (int i = 0; i < rank; ++i) {
        // s_i(alpha_j) = alpha_j - a_{ij} alpha_i
        Mat s(rank, std::vector<long long>(rank, 0));
        for (int j = 0; j < rank; ++j) s[j][j] = 1;
        for (int j = 0; j < rank; ++j) s[i][j] -= cartan[i][j];
        gens.push_back(s);
    }
    Mat id(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) id[i][i] = 1;
    std::set<Mat> seen{id};
    std::vector<Mat> frontier{id};
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Mat x = mul(g, w);
                if (seen.insert(x).second) next.push_back(x);
            }
        frontier = std::move(next);
    }
    Mat p(rank, std::vector<long long>(rank, 0));
    for (int i = 0; i < rank; ++i) p[node_perm[i]][i] = 1;
    cpp_int count = 0;
    for (const auto& w : seen)
        if (mul(p, w) == mul(w, p)) ++count;
    return count;
}

} // namespace qw
