#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "quiverweyl/quiver.hpp"

namespace qw {

enum class RootKind { Real, Imaginary, NotARoot };

struct Root {
    DimVec vec;
    RootKind kind = RootKind::NotARoot;
    long long p = 0;
};

inline bool operator==(const Root& a, const Root& b) { return a.vec == b.vec; }
inline bool operator<(const Root& a, const Root& b) { return a.vec < b.vec; }

// One term of a decomposition: a root taken with multiplicity.
struct DecompTerm {
    Root root;
    int multiplicity = 1;
};

struct Decomposition {
    std::vector<DecompTerm> terms;

    DimVec total(std::size_t n) const {
        DimVec s(n, 0);
        for (const auto& t : terms)
            for (std::size_t i = 0; i < n; ++i) s[i] += t.multiplicity * t.root.vec[i];
        return s;
    }
};

// Root classification and Sigma_{0,0} machinery for one quiver setting.
// Memo tables live here, so independent analyses may run concurrently on
// separate engines.
class RootEngine {
public:
    explicit RootEngine(const QuiverSetting& s, int max_weight = 24)
        : setting_(s), max_weight_(max_weight) {}

    const QuiverSetting& setting() const { return setting_; }
    int max_weight() const { return max_weight_; }

    // Reflection descent. Apply s_i(b) = b - (b, e_i) e_i at loop-free
    // vertices with positive pairing until a terminal state is reached: a
    // loop-free simple (real), the fundamental region (imaginary), or an
    // invalid vector. The coordinate sum strictly decreases, so this
    // terminates.
    RootKind classify(DimVec beta) const {
        if (!nonnegative(beta)) throw ValidationError("classify_root: negative entry");
        if (is_zero(beta)) throw ValidationError("classify_root: zero vector");
        const int n = static_cast<int>(setting_.quiver.size());
        for (;;) {
            int i = single_support_vertex(beta);
            if (i >= 0 && setting_.quiver.loops_at(i) == 0 && beta[i] == 1) return RootKind::Real;
            int pivot = -1;
            for (int v = 0; v < n; ++v) {
                if (setting_.quiver.loops_at(v) > 0) continue;
                if (pairing_with_simple(beta, v) > 0) { pivot = v; break; }
            }
            if (pivot < 0) {
                // Fundamental region candidate: connected support required.
                return support_connected(setting_.quiver, beta) ? RootKind::Imaginary
                                                                : RootKind::NotARoot;
            }
            long long c = pairing_with_simple(beta, pivot);
            beta[pivot] -= static_cast<int>(c);
            if (beta[pivot] < 0) return RootKind::NotARoot;
            if (is_zero(beta)) return RootKind::NotARoot;
        }
    }

    std::optional<Root> root_of(const DimVec& beta) const {
        RootKind k = classify(beta);
        if (k == RootKind::NotARoot) return std::nullopt;
        return Root{beta, k, setting_.cartan.p_value(beta)};
    }

    // All positive roots 0 < b <= bound, lexicographic in the declared
    // vertex order.
    std::vector<Root> roots_below(const DimVec& bound) const {
        if (weight(bound) > max_weight_)
            throw ValidationError("enumeration bound exceeds the configured weight limit");
        std::vector<Root> out;
        DimVec b(bound.size(), 0);
        enumerate_boxed(bound, 0, b, out);
        return out;
    }

    // Membership in Sigma_{0,0}: alpha is a positive root whose p-value
    // strictly dominates every nontrivial decomposition into positive roots.
    bool in_sigma00(const DimVec& alpha) const {
        auto r = root_of(alpha);
        if (!r) return false;
        auto split = best_split(alpha);
        return !split || r->p > *split;
    }

    // Exhaustive reference for in_sigma00, kept behind the oracle flag.
    bool in_sigma00_naive(const DimVec& alpha) const {
        auto r = root_of(alpha);
        if (!r) return false;
        auto roots = roots_below(alpha);
        long long best = -1;
        bool found = false;
        naive_split(alpha, roots, 0, 0, 0, false, best, found);
        return !found || r->p > best;
    }

    // Best sum of p-values over multisets of >= 1 positive roots summing to
    // gamma; nullopt if gamma admits no such cover. best(gamma - beta) only
    // needs roots <= gamma, so one memo table serves the whole analysis.
    std::optional<long long> best_cover(const DimVec& gamma) const {
        if (is_zero(gamma)) return 0;
        auto it = memo_.find(gamma);
        if (it != memo_.end()) return it->second;
        memo_[gamma] = std::nullopt; // cycle guard; sums strictly decrease anyway
        std::optional<long long> best;
        for (const auto& r : roots_below(gamma)) {
            auto rest = best_cover(sub(gamma, r.vec));
            if (!rest) continue;
            long long v = r.p + *rest;
            if (!best || v > *best) best = v;
        }
        memo_[gamma] = best;
        return best;
    }

    // Canonical decomposition: the unique coarsest decomposition into
    // Sigma_{0,0} elements, computed by brute-force coarsest-element search.
    Decomposition canonical_decomposition(const DimVec& alpha) const;

    // All multisets of Sigma_{0,0} vectors summing to alpha, each returned as
    // sorted (vector, multiplicity) terms. Deterministic order.
    std::vector<Decomposition> all_sigma00_decompositions(const DimVec& alpha) const {
        std::vector<DimVec> pool;
        for (const auto& r : roots_below(alpha))
            if (in_sigma00(r.vec)) pool.push_back(r.vec);
        std::vector<Decomposition> out;
        std::vector<std::pair<DimVec, int>> current;
        collect_multisets(alpha, pool, 0, current, out);
        return out;
    }

    bool in_root_span(const DimVec& alpha) const {
        // Greedy cover by roots; vertex simples are always roots, so this
        // holds for every nonnegative vector, but the check stays explicit.
        DimVec rest = alpha;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0) continue;
            if (classify(unit_vector(rest.size(), i)) == RootKind::NotARoot) return false;
        }
        return true;
    }

private:
    // Max over splits of alpha into >= 2 roots of the p-sum; nullopt when no
    // nontrivial decomposition exists.
    std::optional<long long> best_split(const DimVec& alpha) const {
        std::optional<long long> best;
        for (const auto& r : roots_below(alpha)) {
            if (r.vec == alpha) continue;
            auto rest = best_cover(sub(alpha, r.vec));
            if (!rest) continue;
            long long v = r.p + *rest;
            if (!best || v > *best) best = v;
        }
        return best;
    }

    void naive_split(const DimVec& remaining, const std::vector<Root>& roots, std::size_t from,
                     long long psum, int terms, bool capped, long long& best, bool& found) const {
        if (is_zero(remaining)) {
            if (terms >= 2) {
                found = true;
                best = std::max(best, psum);
            }
            return;
        }
        for (std::size_t i = from; i < roots.size(); ++i) {
            if (!leq(roots[i].vec, remaining)) continue;
            (void)capped;
            naive_split(sub(remaining, roots[i].vec), roots, i, psum + roots[i].p, terms + 1,
                        capped, best, found);
        }
    }

    void enumerate_boxed(const DimVec& bound, std::size_t i, DimVec& b,
                         std::vector<Root>& out) const {
        if (i == bound.size()) {
            if (is_zero(b)) return;
            if (auto r = root_of(b)) out.push_back(*r);
            return;
        }
        for (int v = 0; v <= bound[i]; ++v) {
            b[i] = v;
            enumerate_boxed(bound, i + 1, b, out);
        }
        b[i] = 0;
    }

    void collect_multisets(const DimVec& remaining, const std::vector<DimVec>& pool,
                           std::size_t from, std::vector<std::pair<DimVec, int>>& current,
                           std::vector<Decomposition>& out) const {
        if (is_zero(remaining)) {
            Decomposition d;
            for (const auto& [v, m] : current) {
                Root r{v, classify(v) == RootKind::Real ? RootKind::Real : RootKind::Imaginary,
                       setting_.cartan.p_value(v)};
                d.terms.push_back(DecompTerm{r, m});
            }
            out.push_back(std::move(d));
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (!leq(pool[i], remaining)) continue;
            DimVec rest = remaining;
            int mult = 0;
            while (leq(pool[i], rest)) {
                rest = sub(rest, pool[i]);
                ++mult;
                current.emplace_back(pool[i], mult);
                collect_multisets(rest, pool, i + 1, current, out);
                current.pop_back();
            }
        }
    }

    int single_support_vertex(const DimVec& b) const {
        int idx = -1;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == 0) continue;
            if (idx >= 0) return -1;
            idx = static_cast<int>(i);
        }
        return idx;
    }

    long long pairing_with_simple(const DimVec& b, int v) const {
        long long s = 0;
        for (std::size_t j = 0; j < b.size(); ++j) s += setting_.cartan.cartan[v][j] * b[j];
        return s;
    }

    const QuiverSetting& setting_;
    int max_weight_;
    mutable std::map<DimVec, std::optional<long long>> memo_;
};

// True iff `fine` refines `coarse`: the fine terms can be partitioned into
// blocks whose sums are exactly the coarse terms.
inline bool refines(const Decomposition& fine, const Decomposition& coarse, std::size_t n) {
    std::vector<DimVec> units; // fine terms, one entry per multiplicity
    for (const auto& t : fine.terms)
        for (int m = 0; m < t.multiplicity; ++m) units.push_back(t.root.vec);
    std::vector<DimVec> slots;
    for (const auto& t : coarse.terms)
        for (int m = 0; m < t.multiplicity; ++m) slots.push_back(t.root.vec);

    std::vector<DimVec> fill(slots.size(), DimVec(n, 0));
    // Assign fine units to slots, largest-first, with componentwise bounds.
    std::sort(units.begin(), units.end(), [](const DimVec& a, const DimVec& b) {
        return weight(a) > weight(b) || (weight(a) == weight(b) && a > b);
    });
    std::function<bool(std::size_t)> place = [&](std::size_t u) -> bool {
        if (u == units.size()) {
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (fill[s] != slots[s]) return false;
            return true;
        }
        for (std::size_t s = 0; s < slots.size(); ++s) {
            DimVec next = add(fill[s], units[u]);
            if (!leq(next, slots[s])) continue;
            // Identical slot states are interchangeable; skip duplicates.
            bool dup = false;
            for (std::size_t t = 0; t < s; ++t)
                if (slots[t] == slots[s] && fill[t] == fill[s]) { dup = true; break; }
            if (dup) continue;
            fill[s] = next;
            if (place(u + 1)) return true;
            fill[s] = sub(next, units[u]);
        }
        return false;
    };
    return place(0);
}

inline Decomposition RootEngine::canonical_decomposition(const DimVec& alpha) const {
    if (!nonnegative(alpha) || is_zero(alpha))
        throw ValidationError("canonical_decomposition: alpha must be nonzero and nonnegative");
    if (!in_root_span(alpha))
        throw EmptyVarietyError("alpha is not an N-combination of positive roots");
    if (in_sigma00(alpha)) {
        Root r{alpha, classify(alpha), setting_.cartan.p_value(alpha)};
        return Decomposition{{DecompTerm{r, 1}}};
    }
    auto all = all_sigma00_decompositions(alpha);
    if (all.empty()) throw EmptyVarietyError("alpha admits no decomposition into Sigma_00 roots");
    const std::size_t n = alpha.size();
    std::optional<std::size_t> coarsest;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool all_refine = true;
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            if (!refines(all[j], all[i], n)) { all_refine = false; break; }
        }
        if (all_refine) {
            if (coarsest) {
                // Two distinct coarsest elements would contradict uniqueness.
                bool same = refines(all[*coarsest], all[i], n) && refines(all[i], all[*coarsest], n);
                if (!same)
                    throw InternalInconsistency("canonical decomposition is not unique");
            } else {
                coarsest = i;
            }
        }
    }
    if (!coarsest) throw InternalInconsistency("no coarsest Sigma_00 decomposition exists");
    return all[*coarsest];
}

} // namespace qw
