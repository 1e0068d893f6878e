#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>

using namespace jstab;
using namespace testing_support;

namespace {

const DivisorClass h{1};
const DivisorClass L2h{2};
const DivisorClass F1_L{1, 2};
const DivisorClass F1_H{Rational(1, 3), Rational(5, 3)};

Rational min_ratio(const IntersectionModel& M, const DivisorClass& B, const DivisorClass& L) {
    std::optional<Rational> best;
    for (auto& k : M.nef_functionals) {
        Rational r = evaluate(k, B) / evaluate(k, L);
        if (!best || r < *best) best = r;
    }
    return *best;
}

}  // namespace

TEST_CASE("classification examples") {
    auto F1 = hirzebruch(1);
    Classification c = classify_surface(F1, F1_L, F1_H);
    CHECK(c.verdict == Verdict::StableNotUniform);
    CHECK(c.b2 == DivisorClass{1, 1});
    CHECK_FALSE(c.epsilon);

    auto P2 = projective_plane();
    Classification u = classify_surface(P2, L2h, h);
    CHECK(u.verdict == Verdict::UniformlyStable);
    CHECK(u.b2 == h);
    REQUIRE(u.epsilon);
    CHECK(*u.epsilon == Rational(1, 2));

    Classification bad = classify_surface(F1, F1_L, DivisorClass{0, 4});
    CHECK(bad.verdict == Verdict::Unstable);
    CHECK(bad.b2 == DivisorClass{Rational(8, 3), Rational(4, 3)});
    CHECK(bad.witness == 0);
    CHECK(bad.witness_label == "C_0");
    CHECK(bad.b2_values[0] == Rational(-4, 3));

    // H nef but not big: semistable only
    CHECK(classify_surface(hirzebruch(0), DivisorClass{1, 1}, DivisorClass{0, 1}).verdict == Verdict::Semistable);
    CHECK_THROWS_AS(classify_surface(F1, DivisorClass{1, 1}, F1_H), HypothesisError);
    CHECK(to_string(Verdict::StableNotUniform) == "StableNotUniform");
}

TEST_CASE("thresholds") {
    auto F1 = hirzebruch(1);
    ThresholdReport t = threshold(F1, F1_L, F1_H);
    CHECK(t.ample_infimum == Rational(4, 3));
    CHECK(t.delta_pp == 0);
    CHECK(t.pseff_threshold == Rational(1, 3));
    CHECK(t.h_pseffective);
    auto P2 = projective_plane();
    CHECK(threshold(P2, L2h, L2h).delta_pp == 1);
    for (int i = -10; i <= 10; ++i) {
        Rational q(i, 3);
        CHECK(threshold(F1, F1_L, q * F1_L).delta_pp == q);
    }
}

TEST_CASE("threshold is affine in the twisting class") {
    std::mt19937 g(41);
    for (auto& M : surface_models())
        for (int trial = 0; trial < 10; ++trial) {
            DivisorClass L = rand_ample(M, g), H = rand_class(M, g);
            Rational base = threshold(M, L, H).delta_pp;
            Rational a = rand_rat(g, 0, 3), b = rand_rat(g, -3, 3);
            CHECK(threshold(M, L, a * H + b * L).delta_pp == a * base + b);
        }
}

TEST_CASE("uniform stability matches a positive threshold; B2 squares like H") {
    std::mt19937 g(42);
    for (auto& M : surface_models())
        for (int trial = 0; trial < 30; ++trial) {
            DivisorClass L = rand_ample(M, g), H = rand_class(M, g, -1, 3);
            DivisorClass B2 = surface_b2(M, L, H);
            CHECK(volume(M, B2) == volume(M, H));
            if (!is_big(M, H) || !is_pseffective(M, H)) continue;
            Classification c = classify_surface(M, L, H);
            CHECK((c.verdict == Verdict::UniformlyStable) == (threshold(M, L, H).delta_pp > 0));
            if (c.verdict == Verdict::Unstable) {
                REQUIRE(c.witness >= 0);
                const DivisorClass& C = M.curves.at(c.witness).cls;
                CHECK(slope_leading_term(M, L, H, C, 1, 1) < 0);
            }
            if (c.verdict == Verdict::UniformlyStable) CHECK(*c.epsilon > 0);
        }
}

TEST_CASE("star convexity along L + tH") {
    std::mt19937 g(43);
    std::vector<Rational> ts{Rational(1, 64), Rational(1, 8), Rational(1, 2), 1, 3};
    for (auto& M : surface_models())
        for (int trial = 0; trial < 20; ++trial) {
            DivisorClass L = rand_ample(M, g), H = rand_ample(M, g);
            Verdict v = classify_surface(M, L, H).verdict;
            if (v == Verdict::Unstable) continue;
            for (auto& t : ts) CHECK(classify_surface(M, L + t * H, H).verdict == Verdict::UniformlyStable);
        }
}

TEST_CASE("sufficient criteria") {
    auto P2 = projective_plane();
    FuResult same = check_fu(P2, L2h, L2h);
    CHECK(same.verdict == Verdict::SufficientOnly);
    CHECK(same.criterion == "uniform");
    CHECK(same.delta_star == Rational(1, 3));
    CHECK(same.epsilon == 1);
    FuResult line = check_fu(P2, L2h, h);
    CHECK(line.criterion == "uniform");
    CHECK(line.epsilon == Rational(1, 2));
    FuResult zero = check_fu(P2, L2h, DivisorClass{0});
    CHECK(zero.criterion == "semistable");
    CHECK(check_fu(hirzebruch(1), F1_L, DivisorClass{0, 4}).verdict == Verdict::Inconclusive);

    std::mt19937 g(44);
    auto F1 = hirzebruch(1);
    for (int trial = 0; trial < 100; ++trial) {
        DivisorClass L = rand_ample(F1, g), H = rand_class(F1, g, -1, 3);
        if (check_fu(F1, L, H).criterion == "uniform")
            CHECK(classify_surface(F1, L, H).verdict == Verdict::UniformlyStable);
    }
}

TEST_CASE("comparability bounds") {
    auto P2 = projective_plane();
    ComparabilityResult c = comparability_bound(P2, L2h, h);
    CHECK(c.delta == Rational(1, 2));
    CHECK(c.delta <= 1);
    EnergyReport r = energy_report(P2, L2h, h, FlagChain{{h}});
    CHECK(abs(r.jh) <= c.delta * r.i_minus_j);
    CHECK(abs(r.jh) <= c.delta * r.j);
    CHECK(comparability_bound(P2, L2h, DivisorClass{0}).delta == 0);
    ComparabilityResult f = comparability_bound(hirzebruch(1), F1_L, DivisorClass{0, 1});
    CHECK(f.delta > 0);
    CHECK(f.plus.verdict == Verdict::SufficientOnly);
    CHECK(f.minus.verdict == Verdict::SufficientOnly);

    std::mt19937 g(45);
    for (auto& M : surface_models())
        for (int trial = 0; trial < 10; ++trial) {
            DivisorClass L = rand_ample(M, g), H = rand_class(M, g);
            Rational d = comparability_bound(M, L, H).delta;
            EnergyReport e = energy_report(M, L, H, rand_chain(M, L, g, 2));
            CHECK(abs(e.jh) <= d * e.j);
        }
}

TEST_CASE("cycle criterion") {
    auto P2 = projective_plane();
    SwResult s = check_sw(P2, L2h, h, builtin_cycles(P2), P2.cycles_complete);
    CHECK(s.epsilon == Rational(1, 2));
    CHECK(s.verdict == Verdict::UniformlyStable);
    CHECK_FALSE(s.relative);
    auto F1 = hirzebruch(1);
    Cycle c0{"C_0", 1, DivisorClass{1, 0}};
    CHECK(check_sw(F1, F1_L, F1_H, {c0}).epsilon == 0);
    CHECK(check_sw(F1, F1_L, F1_H, {c0}).relative);
    CHECK(check_sw(P2, L2h, DivisorClass{0}, builtin_cycles(P2)).epsilon == 0);
    Cycle whole{"X", 2};
    whole.whole = true;
    SwResult w = check_sw(P2, L2h, h, {whole});
    REQUIRE(w.rows.size() == 1);
    CHECK(w.rows[0].skipped);

    std::mt19937 g(46);
    for (auto& M : surface_models())
        for (int trial = 0; trial < 20; ++trial) {
            DivisorClass L = rand_ample(M, g), H = rand_ample(M, g);
            SwResult r = check_sw(M, L, H, builtin_cycles(M), true);
            Classification c = classify_surface(M, L, H);
            CHECK(r.epsilon == min_ratio(M, c.b2, L));
            if (c.epsilon) CHECK(r.epsilon == *c.epsilon);
        }
}

TEST_CASE("minimal model claim") {
    auto X = make_model("p1xp2", 3, {"a", "b"}, {{{0, 1, 1}, 1}}, {{1, 0}, {0, 1}},
                        {DivisorClass{1, 0}, DivisorClass{0, 1}}, DivisorClass{1, 1});
    DivisorClass K{0, 1}, L{1, 1};
    Cycle fine{"V", 2};
    fine.k_pairings = {1, 5, 0};
    fine.j = 1;
    Cycle broken{"W", 2};
    broken.k_pairings = {1, 0, 1};
    broken.j = 1;
    MinimalModelResult r = check_minimal_model(X, K, L, 1, {fine, broken});
    CHECK_FALSE(r.pass);
    CHECK(r.rows[0].ok);
    CHECK(r.rows[0].coefficients == RVec{1, 0, 0});
    CHECK_FALSE(r.rows[1].ok);
    CHECK(r.rows[1].witness == 2);
    CHECK(check_minimal_model(X, K, L, 2, {broken}).pass);
    CHECK_THROWS_AS(check_minimal_model(X, DivisorClass{-1, 0}, L, 1, {fine}), HypothesisError);

    auto F1 = hirzebruch(1);
    Cycle fib{"f", 1, DivisorClass{0, 1}};
    MinimalModelResult f = check_minimal_model(F1, DivisorClass{0, 1}, F1_L, 1, {fib});
    CHECK(f.pass);
    CHECK(f.rows[0].coefficients[0] == 1);
}

TEST_CASE("proportional components") {
    auto dm = make_deminormal({projective_plane(), projective_plane()});
    std::vector<Rational> ts{Rational(1, 2), 1, 2};
    ProportionalResult ok = check_proportional_components(dm, {h, L2h}, {h, L2h}, ts);
    CHECK(ok.ratios_equal);
    CHECK(ok.components_stable);
    CHECK(ok.certified);
    for (auto& [t, uni] : ok.grid) CHECK(uni);
    ProportionalResult bad = check_proportional_components(dm, {h, h}, {h, L2h}, ts);
    CHECK_FALSE(bad.ratios_equal);
    CHECK_FALSE(bad.certified);
}

TEST_CASE("section through the boundary") {
    auto F1 = hirzebruch(1);
    auto M = boundary_class(F1, F1_H);
    REQUIRE(M);
    CHECK(*M == DivisorClass{1, 1});
    std::vector<Rational> ts;
    for (int i = 0; i <= 64; ++i) ts.push_back(Rational(i, 64));
    UjsReport u = ujs_section(F1, F1_H, ts);
    CHECK(u.boundary_found);
    CHECK(u.contiguous);
    CHECK(u.matches_half_interval);
    REQUIRE(u.uniform_lo);
    CHECK(*u.uniform_lo == Rational(33, 64));
    for (auto& row : u.rows) {
        const Rational& t = row.coords[0];
        if (t == Rational(1, 4)) CHECK(row.cls.verdict != Verdict::UniformlyStable);
        if (t == 1) CHECK(row.cls.verdict == Verdict::UniformlyStable);
    }
}

TEST_CASE("parallel scans match serial scans") {
    auto F1 = hirzebruch(1);
    std::vector<Rational> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(Rational(i, 40));
    auto a = scan_segment(F1, DivisorClass{1, 1}, F1_H, ts);
    auto b = scan_segment_serial(F1, DivisorClass{1, 1}, F1_H, ts);
    REQUIRE(a.size() == b.size());
    CHECK(scan_csv(F1, a, {"t"}) == scan_csv(F1, b, {"t"}));
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= 8; ++i) {
        xs.push_back(Rational(i, 4));
        ys.push_back(Rational(i, 2));
    }
    CHECK(scan_csv(F1, scan_plane(F1, F1_H, xs, ys), {"x", "y"}) ==
          scan_csv(F1, scan_plane_serial(F1, F1_H, xs, ys), {"x", "y"}));
}
