#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverweyl/leaves.hpp"
#include "quiverweyl/roots.hpp"
#include "quiverweyl/weyl.hpp"

namespace qw {

struct LeafRecord {
    IsotropicDecomposition iso;
    EqualityPattern pattern;
    CoxeterType type;
    cpp_int order;
    std::optional<std::vector<long long>> local_theta;
};

struct ComponentRecord {
    DimVec alpha;
    int multiplicity = 1;
    ResolutionVerdict resolution = ResolutionVerdict::Indivisible;
    std::vector<LeafRecord> leaves;
};

struct AnalysisReport {
    Decomposition canonical;
    std::vector<ComponentRecord> components;
    WeylProduct total;
    std::optional<StabilityClass> stability;
    bool oracle_checked = false;
};

namespace detail {

// Collapse the canonical terms to distinct components in first-occurrence
// order; multiplicities of equal components accumulate.
inline std::vector<ComponentRecord> distinct_components(const Decomposition& canonical) {
    std::vector<ComponentRecord> out;
    for (const auto& t : canonical.terms) {
        bool merged = false;
        for (auto& c : out)
            if (c.alpha == t.root.vec) {
                c.multiplicity += t.multiplicity;
                merged = true;
                break;
            }
        if (!merged) {
            ComponentRecord c;
            c.alpha = t.root.vec;
            c.multiplicity = t.multiplicity;
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Node permutation of the finite A/D diagram realizing the fold case, in
// the numbering of finite_cartan.
inline std::optional<std::vector<int>> fold_automorphism(const AffineType& affine, FoldCase c) {
    const int n = affine.index;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    switch (c) {
        case FoldCase::None:
            return perm;
        case FoldCase::CyclePair:
        case FoldCase::CycleTwoPairs:
            return std::vector<int>{2, 1, 0}; // reverse the A3 chain
        case FoldCase::OuterPair:
        case FoldCase::OuterTwoPairs:
        case FoldCase::EndPair:
        case FoldCase::EndTwoPairs:
            std::swap(perm[n - 2], perm[n - 1]); // swap the D_n fork
            return perm;
        case FoldCase::OuterTriple:
        case FoldCase::OuterQuadruple:
            return std::vector<int>{2, 1, 3, 0}; // 3-cycle on the D4 prongs
    }
    return std::nullopt;
}

inline void run_oracle_checks(const RootEngine& engine, const AnalysisReport& report,
                              const DimVec& alpha) {
    for (const auto& r : engine.roots_below(alpha))
        if (engine.in_sigma00(r.vec) != engine.in_sigma00_naive(r.vec))
            throw InternalInconsistency("Sigma_00 membership disagrees with the naive search");
    for (const auto& c : report.components)
        for (const auto& leaf : c.leaves) {
            const auto& affine = leaf.iso.affine;
            // Element-level cross-check of the folding table, for the group
            // sizes where full enumeration is feasible.
            if (affine.letter == 'E' || affine.index > 5) continue;
            auto perm = fold_automorphism(affine, leaf.pattern.fold_case);
            if (!perm) continue;
            if (fixed_subgroup_order(affine.letter, affine.index, *perm) != leaf.order)
                throw InternalInconsistency(
                    "fixed-subgroup oracle disagrees with the folding table");
        }
}

} // namespace detail

// The full pipeline: canonical decomposition, resolution criterion per
// distinct component, leaf enumeration, folding, and group assembly.
inline AnalysisReport analyze(const QuiverSetting& setting, int max_weight = 24,
                              bool oracle = false) {
    RootEngine engine(setting, max_weight);
    AnalysisReport report;
    report.canonical = engine.canonical_decomposition(setting.alpha);
    report.components = detail::distinct_components(report.canonical);

    for (auto& c : report.components) {
        c.resolution = resolution_verdict(setting, c.alpha);
        if (c.resolution == ResolutionVerdict::NoResolution) {
            std::string s = "(";
            for (std::size_t i = 0; i < c.alpha.size(); ++i)
                s += (i ? "," : "") + std::to_string(c.alpha[i]);
            s += ")";
            throw MethodNotApplicableError("component " + s +
                                           " admits no symplectic resolution");
        }
    }

    for (auto& c : report.components) {
        for (auto& iso : enumerate_isotropic_decompositions(setting, engine, c.alpha)) {
            LeafRecord leaf;
            leaf.pattern = classify_pattern(iso.local, iso.affine);
            leaf.type = fold(iso.affine, leaf.pattern);
            leaf.order = weyl_order(leaf.type);
            if (setting.theta) leaf.local_theta = localize_stability(*setting.theta, iso.terms);
            leaf.iso = std::move(iso);
            c.leaves.push_back(std::move(leaf));
            report.total.factors.push_back(c.leaves.back().type);
        }
    }
    report.total.normalize();

    if (setting.theta) report.stability = stability_class(setting, *setting.theta);

    if (oracle) {
        detail::run_oracle_checks(engine, report, setting.alpha);
        report.oracle_checked = true;
    }
    return report;
}

inline WeylProduct namikawa_weyl_group(const QuiverSetting& setting, int max_weight = 24) {
    return analyze(setting, max_weight).total;
}

} // namespace qw
