#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace qwt;

namespace {

// Build a local quiver straight from a catalog diagram; label_ids give the
// label-equality pattern (equal id = equal root label).
std::pair<LocalQuiver, AffineType> catalog_lq(char letter, int index,
                                              const std::vector<int>& label_ids) {
    const int k = static_cast<int>(label_ids.size());
    for (const auto& diagram : affine_catalog(k)) {
        if (diagram.letter != letter || diagram.index != index) continue;
        LocalQuiver lq;
        lq.k = k;
        lq.adjacency = diagram.adj;
        lq.multiplicities = diagram.delta;
        lq.loops.assign(k, 0);
        std::map<int, int> first;
        for (int i = 0; i < k; ++i) {
            first.emplace(label_ids[i], i);
            bool repeated = false;
            for (int j = 0; j < k; ++j) repeated |= (j != i && label_ids[j] == label_ids[i]);
            lq.labels.push_back(Root{unit_vector(k, first[label_ids[i]]),
                                     repeated ? RootKind::Imaginary : RootKind::Real,
                                     repeated ? 1 : 0});
        }
        AffineType t;
        t.letter = letter;
        t.index = index;
        t.vertex_matching.resize(k);
        for (int i = 0; i < k; ++i) t.vertex_matching[i] = i;
        return {lq, t};
    }
    FAIL("catalog diagram not found");
    return {};
}

CoxeterType fold_of(char letter, int index, const std::vector<int>& label_ids,
                    FoldCase expected_case) {
    auto [lq, t] = catalog_lq(letter, index, label_ids);
    auto pat = classify_pattern(lq, t);
    CHECK(pat.fold_case == expected_case);
    return fold(t, pat);
}

} // namespace

TEST_CASE("Weyl group orders") {
    CHECK(weyl_order({'A', 2}) == 6);
    CHECK(weyl_order({'A', 3}) == 24);
    CHECK(weyl_order({'B', 3}) == 48);
    CHECK(weyl_order({'B', 4}) == 384);
    CHECK(weyl_order({'C', 2}) == 8);
    CHECK(weyl_order({'D', 4}) == 192);
    CHECK(weyl_order({'D', 5}) == 1920);
    CHECK(weyl_order({'G', 2}) == 12);
    CHECK(weyl_order({'E', 6}) == 51840);
    CHECK(weyl_order({'E', 7}) == 2903040);
    CHECK(weyl_order({'E', 8}) == 696729600);
}

TEST_CASE("naive symmetry group is the product of symmetric groups on label classes") {
    auto [lq, t] = catalog_lq('A', 3, {1, 2, 3, 2}); // labels (x, y, z, y)
    auto s = naive_symmetry_group(lq);
    CHECK(s.order == 2);
    REQUIRE(s.classes.size() == 3);
    CHECK(s.classes[0] == std::vector<int>{0});
    CHECK(s.classes[1] == std::vector<int>{1, 3});
    CHECK(s.classes[2] == std::vector<int>{2});

    auto [distinct, t2] = catalog_lq('A', 2, {1, 2, 3});
    CHECK(naive_symmetry_group(distinct).order == 1);

    auto [outer4, t3] = catalog_lq('D', 4, {1, 1, 9, 1, 1}); // all outer labels equal
    CHECK(naive_symmetry_group(outer4).order == 24);
}

TEST_CASE("labeled automorphism group") {
    auto [lq, t] = catalog_lq('A', 3, {1, 2, 1, 3}); // opposite pair equal
    CHECK(labeled_automorphism_group(lq).size() == 2);
    auto [distinct, t2] = catalog_lq('A', 2, {1, 2, 3});
    CHECK(labeled_automorphism_group(distinct).size() == 1);
    auto [outer4, t3] = catalog_lq('D', 4, {1, 1, 9, 1, 1});
    CHECK(labeled_automorphism_group(outer4).size() == 24);
}

TEST_CASE("folding table") {
    CHECK(fold_of('A', 2, {1, 2, 3}, FoldCase::None) == CoxeterType{'A', 2});
    CHECK(fold_of('A', 3, {1, 2, 3, 4}, FoldCase::None) == CoxeterType{'A', 3});
    CHECK(fold_of('A', 3, {1, 2, 1, 3}, FoldCase::CyclePair) == CoxeterType{'C', 2});
    CHECK(fold_of('A', 3, {1, 2, 1, 2}, FoldCase::CycleTwoPairs) == CoxeterType{'C', 2});
    CHECK(fold_of('D', 4, {1, 2, 9, 3, 4}, FoldCase::None) == CoxeterType{'D', 4});
    CHECK(fold_of('D', 4, {1, 1, 9, 3, 4}, FoldCase::OuterPair) == CoxeterType{'B', 3});
    CHECK(fold_of('D', 4, {1, 1, 9, 3, 3}, FoldCase::OuterTwoPairs) == CoxeterType{'B', 3});
    CHECK(fold_of('D', 4, {1, 1, 9, 1, 4}, FoldCase::OuterTriple) == CoxeterType{'G', 2});
    CHECK(fold_of('D', 4, {1, 1, 9, 1, 1}, FoldCase::OuterQuadruple) == CoxeterType{'G', 2});
    CHECK(fold_of('D', 5, {1, 2, 8, 9, 3, 4}, FoldCase::None) == CoxeterType{'D', 5});
    CHECK(fold_of('D', 5, {1, 1, 8, 9, 3, 4}, FoldCase::EndPair) == CoxeterType{'B', 4});
    CHECK(fold_of('D', 5, {1, 2, 8, 9, 3, 3}, FoldCase::EndPair) == CoxeterType{'B', 4});
    CHECK(fold_of('D', 5, {1, 1, 8, 9, 3, 3}, FoldCase::EndTwoPairs) == CoxeterType{'B', 4});
    CHECK(fold_of('E', 6, {1, 2, 3, 4, 5, 6, 7}, FoldCase::None) == CoxeterType{'E', 6});
}

TEST_CASE("coincidences outside the catalog abort loudly") {
    // 5-cycle with two equal labels: no structural symmetry supports it
    auto [lq, t] = catalog_lq('A', 4, {1, 2, 1, 3, 4});
    CHECK_THROWS_AS(classify_pattern(lq, t), InternalInconsistency);
}

TEST_CASE("fixed subgroup oracle") {
    CHECK(fixed_subgroup_order('A', 2, {0, 1}) == 6);
    CHECK(fixed_subgroup_order('A', 3, {2, 1, 0}) == 8);
    CHECK(fixed_subgroup_order('D', 4, {0, 1, 3, 2}) == 48);
    CHECK(fixed_subgroup_order('D', 4, {2, 1, 3, 0}) == 12);
    CHECK(fixed_subgroup_order('D', 5, {0, 1, 2, 4, 3}) == 384);
    // identity automorphism fixes everything
    CHECK(fixed_subgroup_order('A', 3, {0, 1, 2}) == 24);
    CHECK(fixed_subgroup_order('D', 4, {0, 1, 2, 3}) == 192);
}

TEST_CASE("Weyl products") {
    WeylProduct trivial;
    CHECK(trivial.name() == "1");
    CHECK(trivial.order() == 1);

    WeylProduct p;
    p.factors = {{'C', 2}, {'A', 3}};
    p.normalize();
    CHECK(p.name() == "A3 x C2");
    CHECK(p.order() == 192);
}

TEST_CASE("fold case names") {
    CHECK(fold_case_name(FoldCase::None) == "none");
    CHECK(fold_case_name(FoldCase::CyclePair) == "cycle-pair");
    CHECK(fold_case_name(FoldCase::OuterTriple) == "outer-triple");
    CHECK(fold_case_name(FoldCase::EndTwoPairs) == "end-two-pairs");
}
