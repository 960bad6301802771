#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "quiverweyl/analysis.hpp"

using namespace qwt;

TEST_CASE("full analysis of the three-vertex quiver with a middle loop") {
    auto report = analyze(triple_with_loop());
    REQUIRE(report.components.size() == 1);
    const auto& c = report.components[0];
    CHECK(c.alpha == DimVec{1, 2, 1});
    CHECK(c.multiplicity == 1);
    CHECK(c.resolution == ResolutionVerdict::Indivisible);
    REQUIRE(c.leaves.size() == 1);
    const auto& leaf = c.leaves[0];
    CHECK(leaf.iso.affine.letter == 'A');
    CHECK(leaf.iso.affine.index == 3);
    CHECK(leaf.pattern.fold_case == FoldCase::CyclePair);
    CHECK(leaf.type.name() == "C2");
    CHECK(leaf.order == 8);
    REQUIRE(leaf.local_theta.has_value());
    {
        auto sorted = *leaf.local_theta;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<long long>{-1, -1, -1, 3});
    }
    CHECK(report.total.name() == "C2");
    CHECK(report.total.order() == 8);
    REQUIRE(report.stability.has_value());
    CHECK(*report.stability == StabilityClass::Generic);
    CHECK_FALSE(report.oracle_checked);
}

TEST_CASE("oracle-checked analysis agrees with the plain run") {
    auto plain = analyze(triple_with_loop());
    auto checked = analyze(triple_with_loop(), 24, true);
    CHECK(checked.oracle_checked);
    CHECK(checked.total.name() == plain.total.name());
    CHECK(checked.total.order() == plain.total.order());
}

TEST_CASE("Kleinian settings produce the unfolded finite Weyl groups") {
    struct Case {
        QuiverSetting setting;
        std::string name;
        long long order;
    };
    std::vector<Case> cases = {
        {kleinian_cycle(3), "A2", 6},
        {kleinian_cycle(4), "A3", 24},
        {kleinian_d4(), "D4", 192},
        {kleinian_e6(), "E6", 51840},
    };
    for (auto& cs : cases) {
        INFO(cs.name);
        auto report = analyze(cs.setting, 24, true);
        REQUIRE(report.components.size() == 1);
        REQUIRE(report.components[0].leaves.size() == 1);
        CHECK(report.total.name() == cs.name);
        CHECK(report.total.order() == cs.order);
        CHECK(report.components[0].leaves[0].pattern.fold_case == FoldCase::None);
    }
}

TEST_CASE("real simple roots give the trivial group") {
    auto s = make_setting(2, {{0, 1}}, {1, 0});
    auto g = namikawa_weyl_group(s);
    CHECK(g.name() == "1");
    CHECK(g.order() == 1);
}

TEST_CASE("double of an isotropic root splits with multiplicity two") {
    auto s = kleinian_cycle(3);
    s.alpha = {2, 2, 2};
    auto report = analyze(QuiverSetting::make(s.quiver, s.alpha));
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0].alpha == DimVec{1, 1, 1});
    CHECK(report.components[0].multiplicity == 2);
    CHECK(report.total.name() == "A2");
}

TEST_CASE("component without a symplectic resolution is rejected") {
    CHECK_THROWS_AS(analyze(jordan(3, 2)), MethodNotApplicableError);
}

TEST_CASE("the (2,2) divisible case is still analyzed") {
    auto report = analyze(jordan(2, 2));
    REQUIRE(report.components.size() == 1);
    CHECK(report.components[0].resolution == ResolutionVerdict::TwoTwo);
}

TEST_CASE("total order is the product over all leaves and components") {
    std::mt19937 rng(77);
    int analyzed = 0;
    for (int trial = 0; trial < 40 && analyzed < 10; ++trial) {
        auto s = random_setting(rng, 2, 3, 4, 4);
        AnalysisReport report;
        try {
            report = analyze(s, 16);
        } catch (const MethodNotApplicableError&) {
            continue;
        }
        ++analyzed;
        cpp_int prod = 1;
        std::size_t leaves = 0;
        for (const auto& c : report.components)
            for (const auto& leaf : c.leaves) {
                prod *= leaf.order;
                ++leaves;
            }
        CHECK(report.total.order() == prod);
        CHECK(report.total.factors.size() == leaves);
    }
    CHECK(analyzed >= 5);
}
