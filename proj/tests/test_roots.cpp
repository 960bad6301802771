#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace qwt;

TEST_CASE("double quiver duplicates and reverses arrows") {
    Quiver q = make_quiver(2, {{0, 1}});
    Quiver d = double_quiver(q);
    REQUIRE(d.arrows.size() == 2);
    CHECK(d.arrows[0] == Arrow{0, 1});
    CHECK(d.arrows[1] == Arrow{1, 0});

    Quiver loop = double_quiver(make_quiver(1, {{0, 0}}));
    CHECK(loop.arrows.size() == 2);
    CHECK(loop.loops_at(0) == 2);

    Quiver empty = double_quiver(make_quiver(3, {}));
    CHECK(empty.vertices.size() == 3);
    CHECK(empty.arrows.empty());
}

TEST_CASE("Cartan pairing on the triple-with-loop quiver") {
    auto s = triple_with_loop();
    DimVec e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    // first Cartan row (2, -1, 0); middle diagonal 0 from the loop
    CHECK(s.cartan.pairing(e1, e1) == 2);
    CHECK(s.cartan.pairing(e1, e2) == -1);
    CHECK(s.cartan.pairing(e1, e3) == 0);
    CHECK(s.cartan.pairing(e2, e2) == 0);
    CHECK(s.cartan.pairing(e2, e3) == -1);
    CHECK(s.cartan.pairing(s.alpha, s.alpha) == -4);
    CHECK(s.cartan.p_value(s.alpha) == 3);
    CHECK(s.cartan.p_value(e1) == 0);
    CHECK(s.cartan.p_value(e2) == 1);
}

TEST_CASE("Cartan matrix equals 2I minus double-quiver adjacency") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_setting(rng, 2, 4, 5, 6);
        Quiver d = double_quiver(s.quiver);
        const int n = static_cast<int>(s.quiver.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long adj = 0;
                for (const auto& a : d.arrows)
                    if (a.from == i && a.to == j) ++adj;
                long long expected = (i == j ? 2 : 0) - adj;
                CHECK(s.cartan.cartan[i][j] == expected);
            }
    }
}

TEST_CASE("Cartan pairing is symmetric and bilinear") {
    std::mt19937 rng(11);
    auto s = random_setting(rng, 3, 3, 4, 6);
    std::uniform_int_distribution<int> d(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        DimVec x{d(rng), d(rng), d(rng)}, y{d(rng), d(rng), d(rng)}, z{d(rng), d(rng), d(rng)};
        CHECK(s.cartan.pairing(x, y) == s.cartan.pairing(y, x));
        CHECK(s.cartan.pairing(add(x, z), y) ==
              s.cartan.pairing(x, y) + s.cartan.pairing(z, y));
    }
}

TEST_CASE("p of a vertex simple equals the loop count") {
    for (int loops = 0; loops <= 2; ++loops) {
        auto s = jordan(loops, 1);
        CHECK(s.cartan.p_value({1}) == loops);
    }
}

TEST_CASE("support connectivity") {
    Quiver path = make_quiver(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(support_connected(path, {1, 0, 1}));
    CHECK(support_connected(path, {1, 1, 1}));
    CHECK(support_connected(path, {0, 1, 0}));
    CHECK_FALSE(support_connected(path, {0, 0, 0}));
}

TEST_CASE("root classification on the affine 3-cycle") {
    auto s = kleinian_cycle(3);
    RootEngine engine(s);
    CHECK(engine.classify({1, 1, 0}) == RootKind::Real);
    CHECK(engine.classify({1, 1, 1}) == RootKind::Imaginary);
    CHECK(engine.classify({2, 2, 2}) == RootKind::Imaginary);
    CHECK(engine.classify({2, 2, 0}) == RootKind::NotARoot);
}

TEST_CASE("disconnected support is not a root") {
    auto s = make_setting(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    RootEngine engine(s);
    CHECK(engine.classify({1, 0, 1}) == RootKind::NotARoot);
}

TEST_CASE("root enumeration matches the classical catalogs") {
    SECTION("A3 path, bound (1,1,1): 6 real roots") {
        auto s = make_setting(3, {{0, 1}, {1, 2}}, {1, 1, 1});
        RootEngine engine(s);
        auto roots = engine.roots_below({1, 1, 1});
        REQUIRE(roots.size() == 6);
        for (const auto& r : roots) {
            CHECK(r.kind == RootKind::Real);
            CHECK(r.p == 0);
        }
    }
    SECTION("D4 star: 12 positive roots") {
        auto s = kleinian_d4();
        // finite D4 = drop one outer vertex of the star; work in the full
        // quiver but bound support away from vertex 3
        auto roots = RootEngine(s).roots_below({1, 1, 1, 0, 2});
        int count = 0;
        for (const auto& r : roots) {
            CHECK(r.kind == RootKind::Real);
            ++count;
        }
        CHECK(count == 12);
    }
    SECTION("Jordan quiver: every multiple of the simple is imaginary") {
        auto s = jordan(1, 3);
        auto roots = RootEngine(s).roots_below({3});
        REQUIRE(roots.size() == 3);
        for (const auto& r : roots) CHECK(r.kind == RootKind::Imaginary);
    }
    SECTION("bound zero: empty") {
        auto s = jordan(1, 3);
        CHECK(RootEngine(s).roots_below({0}).empty());
    }
    SECTION("affine 3-cycle up to 2*delta: independent characterization") {
        // beta <= (2,2,2) is a root iff (beta,beta) = 2 (two equal entries,
        // third off by one) or beta is a positive multiple of delta.
        auto s = kleinian_cycle(3);
        RootEngine engine(s);
        std::set<DimVec> expected;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    DimVec v{a, b, c};
                    if (is_zero(v)) continue;
                    if (s.cartan.pairing(v, v) == 2 || (a == b && b == c)) expected.insert(v);
                }
        REQUIRE(expected.size() == 14);
        std::set<DimVec> got;
        for (const auto& r : engine.roots_below({2, 2, 2})) got.insert(r.vec);
        CHECK(got == expected);
    }
}

TEST_CASE("sigma00 membership") {
    SECTION("vertex simples") {
        auto s = make_setting(2, {{0, 1}}, {1, 1});
        RootEngine engine(s);
        CHECK(engine.in_sigma00({1, 0}));
        CHECK(engine.in_sigma00({0, 1}));
    }
    SECTION("triple-with-loop alpha is good") {
        auto s = triple_with_loop();
        CHECK(RootEngine(s).in_sigma00(s.alpha));
    }
    SECTION("affine 3-cycle e1+e2 fails the strict inequality") {
        auto s = kleinian_cycle(3);
        CHECK_FALSE(RootEngine(s).in_sigma00({1, 1, 0}));
    }
}

TEST_CASE("sigma00 DP agrees with naive enumeration on random quivers") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        auto s = random_setting(rng, 3, 3, 3, 6);
        RootEngine engine(s);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 2; ++c) {
                    DimVec v{a, b, c};
                    if (is_zero(v)) continue;
                    INFO("trial " << trial << " vector (" << a << "," << b << "," << c << ")");
                    CHECK(engine.in_sigma00(v) == engine.in_sigma00_naive(v));
                }
    }
}

TEST_CASE("canonical decomposition") {
    SECTION("good vectors are their own decomposition") {
        auto s = triple_with_loop();
        auto d = RootEngine(s).canonical_decomposition(s.alpha);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].root.vec == s.alpha);
        CHECK(d.terms[0].multiplicity == 1);
    }
    SECTION("affine 3-cycle, 2*delta -> (delta, 2)") {
        auto s = make_setting(3, {{0, 1}, {1, 2}, {2, 0}}, {2, 2, 2});
        auto d = RootEngine(s).canonical_decomposition({2, 2, 2});
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].root.vec == DimVec{1, 1, 1});
        CHECK(d.terms[0].multiplicity == 2);
    }
    SECTION("vertex simple") {
        auto s = make_setting(2, {{0, 1}}, {1, 0});
        auto d = RootEngine(s).canonical_decomposition({1, 0});
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].root.vec == DimVec{1, 0});
    }
    SECTION("decomposable vector splits into simples") {
        auto s = make_setting(2, {}, {1, 1});
        auto d = RootEngine(s).canonical_decomposition({1, 1});
        REQUIRE(d.terms.size() == 2);
    }
}

TEST_CASE("refinement check groups fine terms into coarse blocks") {
    auto s = kleinian_cycle(3);
    RootEngine engine(s);
    auto mk = [&](std::vector<std::pair<DimVec, int>> terms) {
        Decomposition d;
        for (auto& [v, m] : terms) d.terms.push_back(DecompTerm{*engine.root_of(v), m});
        return d;
    };
    auto fine = mk({{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
    auto coarse = mk({{{1, 1, 1}, 1}});
    CHECK(refines(fine, coarse, 3));
    CHECK_FALSE(refines(coarse, fine, 3));
    CHECK(refines(fine, fine, 3));
}

TEST_CASE("root invariants hold on every enumerated root") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = random_setting(rng, 2, 4, 5, 6);
        RootEngine engine(s);
        for (const auto& r : engine.roots_below(s.alpha)) {
            long long q = s.cartan.pairing(r.vec, r.vec);
            if (r.kind == RootKind::Real) {
                CHECK(q == 2);
                CHECK(r.p == 0);
            } else {
                CHECK(q <= 0);
                CHECK(r.p >= 1);
            }
            CHECK(support_connected(s.quiver, r.vec));
        }
    }
}
