#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace jstab;
using namespace testing_support;

namespace {

IntersectionModel p1_cubed() {
    return make_model("p1^3", 3, {"a", "b", "c"}, {{{0, 1, 2}, 1}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                      {DivisorClass{1, 0, 0}, DivisorClass{0, 1, 0}, DivisorClass{0, 0, 1}}, DivisorClass{1, 1, 1});
}

}  // namespace

TEST_CASE("builtin intersection numbers") {
    auto P2 = projective_plane();
    CHECK(volume(P2, DivisorClass{2}) == 4);
    auto F1 = hirzebruch(1);
    CHECK(intersect(F1, {DivisorClass{1, 0}, DivisorClass{1, 0}}) == -1);
    CHECK(intersect(F1, {DivisorClass{1, 0}, DivisorClass{0, 1}}) == 1);
    CHECK(intersect(F1, {DivisorClass{0, 1}, DivisorClass{0, 1}}) == 0);
    CHECK(volume(F1, DivisorClass{1, 2}) == 3);
    auto F3 = hirzebruch(3);
    CHECK(volume(F3, DivisorClass{1, 0}) == -3);
    auto B = blown_up_plane();
    CHECK(volume(B, DivisorClass{0, 1}) == -1);
    CHECK(volume(B, DivisorClass{2, -1}) == 3);
    CHECK(intersect_powers(F1, {{DivisorClass{1, 2}, 1}, {DivisorClass{1, 0}, 1}}) == 1);
    CHECK(builtin("hirzebruch", 2).name == hirzebruch(2).name);
    CHECK_THROWS_AS(builtin("nonsense"), InputError);
}

TEST_CASE("model construction checks") {
    CHECK_THROWS_AS(make_model("bad", 2, {"a", "b"}, {{{0, 1}, 1}, {{1, 0}, 2}}, {{1, 0}, {0, 1}},
                               {DivisorClass{1, 0}, DivisorClass{0, 1}}, DivisorClass{1, 1}),
                    InputError);
    // reference class not ample
    CHECK_THROWS_AS(make_model("bad", 2, {"a", "b"}, {{{0, 1}, 1}}, {{1, 0}, {0, 1}},
                               {DivisorClass{1, 0}, DivisorClass{0, 1}}, DivisorClass{1, 0}),
                    InputError);
    auto X = p1_cubed();
    CHECK(X.label_index("c") == 2);
    CHECK_THROWS_AS(X.label_index("d"), InputError);
    CHECK(volume(X, DivisorClass{1, 1, 1}) == 6);
}

TEST_CASE("intersection is symmetric under permutations") {
    std::mt19937 g(11);
    auto X = p1_cubed();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<DivisorClass> cls{rand_class(X, g), rand_class(X, g), rand_class(X, g)};
        Rational base = intersect(X, cls);
        std::vector<int> idx{0, 1, 2};
        while (std::next_permutation(idx.begin(), idx.end()))
            CHECK(intersect(X, {cls[idx[0]], cls[idx[1]], cls[idx[2]]}) == base);
    }
    for (auto& M : surface_models())
        for (int trial = 0; trial < 10; ++trial) {
            auto a = rand_class(M, g), b = rand_class(M, g);
            CHECK(intersect(M, {a, b}) == intersect(M, {b, a}));
        }
}

TEST_CASE("cone membership properties") {
    std::mt19937 g(12);
    for (auto& M : surface_models())
        for (int trial = 0; trial < 60; ++trial) {
            auto a = rand_class(M, g), b = rand_class(M, g);
            if (is_ample(M, a).holds) CHECK(is_nef(M, a).holds);
            if (is_nef(M, a).holds && is_nef(M, b).holds) CHECK(is_nef(M, a + b).holds);
            if (is_nef(M, a).holds) CHECK(is_pseffective(M, a));
            if (is_big(M, a) && is_nef(M, a).holds) CHECK(volume(M, a) > 0);
        }
}

TEST_CASE("ample classes on Hirzebruch surfaces") {
    for (int e = 1; e <= 3; ++e) {
        auto F = hirzebruch(e);
        for (int ai = -4; ai <= 8; ++ai)
            for (int bi = -4; bi <= 16; ++bi) {
                Rational a(ai, 2), b(bi, 2);
                bool expected = a > 0 && b > a * e;
                CHECK(is_ample(F, DivisorClass{a, b}).holds == expected);
            }
    }
    auto F0 = hirzebruch(0);
    CHECK(is_ample(F0, DivisorClass{1, 1}).holds);
    CHECK_FALSE(is_ample(F0, DivisorClass{1, 0}).holds);
}

TEST_CASE("Hodge index on irreducible surfaces") {
    std::mt19937 g(13);
    for (auto& M : surface_models()) {
        const DivisorClass& A = M.reference_ample;
        for (int trial = 0; trial < 80; ++trial) {
            DivisorClass D = rand_class(M, g);
            // project D onto A-orthogonal complement
            D = D - (intersect(M, {D, A}) / volume(M, A)) * A;
            REQUIRE(intersect(M, {D, A}) == 0);
            CHECK(volume(M, D) <= 0);
        }
    }
}

TEST_CASE("bigness and pseudoeffective thresholds") {
    auto F1 = hirzebruch(1);
    CHECK(is_big(F1, DivisorClass{1, 2}));
    CHECK_FALSE(is_big(F1, DivisorClass{0, 1}));
    CHECK(is_pseffective(F1, DivisorClass{1, 0}));
    CHECK_FALSE(is_pseffective(F1, DivisorClass{-1, 3}));
    CHECK(pseff_threshold(F1, DivisorClass{Rational(1, 3), Rational(5, 3)}, DivisorClass{1, 2}) == Rational(1, 3));
    CHECK(pseff_threshold(projective_plane(), DivisorClass{1}, DivisorClass{2}) == Rational(1, 2));
    auto X = p1_cubed();
    CHECK(is_big(X, DivisorClass{1, 1, 1}));
    CHECK_FALSE(is_big(X, DivisorClass{1, 1, 0}));
}

TEST_CASE("deminormal models") {
    auto g = glued_blowups(Rational(1, 10), Rational(1, 100), Rational(1, 100000));
    CHECK(intersect(g.dm, {g.M1, g.M1}) == 1);
    CHECK(intersect(g.dm, {g.M2, g.M2}) == 1);
    CHECK(intersect(g.dm, {g.M1, g.M2}) == 0);
    CHECK(g.dm.at("M1") == g.M1);
    CHECK_THROWS_AS(g.dm.at("missing"), InputError);
    CHECK_FALSE(check_same_average(g.dm, g.L, g.H).same);

    auto dm = make_deminormal({projective_plane(), projective_plane()});
    GlobalClass L{DivisorClass{1}, DivisorClass{1}}, H{DivisorClass{1}, DivisorClass{2}};
    CHECK(volume(dm, L) == 2);
    AverageCheck avg = check_same_average(dm, L, H);
    CHECK_FALSE(avg.same);
    CHECK(avg.ratios == RVec{1, 2});
    CHECK(avg.global_ratio == Rational(3, 2));
    CHECK(avg.witness == 0);
    CHECK(avg.coefficient == Rational(-1, 2));
    CHECK(check_same_average(dm, L, GlobalClass{DivisorClass{1}, DivisorClass{1}}).same);
    CHECK_THROWS_AS(make_deminormal({projective_plane(), hirzebruch(1)}).define("x", {DivisorClass{1}}), InputError);
}
