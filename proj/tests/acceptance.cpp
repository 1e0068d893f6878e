#include "support.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace jstab;
using namespace testing_support;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note = what;
        pass = pass && ok;
    }
};

std::string run_cli(const std::string& args, int& code) {
    std::string cmd = std::string(JSTAB_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    code = pclose(p);
    return out;
}

Outcome hirzebruch_family_check() {
    Outcome o;
    struct Case {
        int e, m, n;
        DivisorClass H;
    };
    for (auto& c : {Case{1, 1, 2, {Rational(1, 3), Rational(5, 3)}}, Case{2, 1, 3, {Rational(1, 2), Rational(5, 2)}}}) {
        auto d = hirzebruch_family(c.e, c.m, c.n, 1);
        const auto& X = d.model;
        o.require(d.H == c.H, "H differs from the closed form");
        DivisorClass B2 = surface_b2(X, d.L, d.H);
        o.require(B2 == DivisorClass{1, Rational(c.e)}, "B2 is not aC_0 + aef");
        o.require(intersect(X, {B2, X.basis(0)}) == 0, "B2.C_0 is not 0");
        o.require(classify_surface(X, d.L, d.H).verdict == Verdict::StableNotUniform, "verdict");
    }
    return o;
}

Outcome threshold_check() {
    Outcome o;
    for (auto [e, n] : {std::pair{1, 2}, std::pair{2, 3}}) {
        auto d = hirzebruch_family(e, 1, n, 1);
        o.require(threshold(d.model, d.L, d.H).delta_pp == 0, "boundary delta_pp is not 0");
        for (int i = 0; i < 20; ++i) {
            Rational q(i - 7, 4);
            o.require(threshold(d.model, d.L, q * d.L).delta_pp == q, "delta_pp(qL) != q");
        }
    }
    return o;
}

Outcome oracle_check() {
    Outcome o;
    auto P2 = projective_plane();
    DivisorClass h{1}, L{2};
    for (auto& c : {FlagChain{{h}}, FlagChain{{h, h}}, FlagChain{{DivisorClass{2}, h}}}) {
        OracleResult r = lattice_count_oracle(P2, L, c, 8);
        o.require(r.polynomial && Rational(r.fitted_e) == e_flag(P2, L, c), "P2 oracle mismatch");
    }
    auto F1 = hirzebruch(1);
    FlagChain c{{DivisorClass{1, 0}}};
    OracleResult r = lattice_count_oracle(F1, DivisorClass{1, 2}, c, 8);
    o.require(r.polynomial && Rational(r.fitted_e) == e_flag(F1, DivisorClass{1, 2}, c), "F_1 oracle mismatch");
    return o;
}

Outcome identity_check() {
    Outcome o;
    std::mt19937 g(1001);
    auto models = surface_models();
    for (int i = 0; i < 500; ++i) {
        const auto& M = models[i % models.size()];
        DivisorClass L = rand_ample(M, g), H = rand_class(M, g);
        FlagChain c;
        for (int k = 1 + i % 4; k > 0; --k) c.levels.push_back(rand_class(M, g));
        o.require(surface_chain_energy(M, L, H, c).value == jh_energy(M, L, H, c), "surface != jh");
        DivisorClass D = rand_eff(M, g, 1);
        o.require(slope_energy(M, L, H, D, 1).value == jh_energy(M, L, H, FlagChain{{D}}), "slope(c=1) != energy");
        FlagChain v = rand_chain(M, L, g, 1 + i % 3);
        o.require(jh_energy(M, L, L, v) == norms(M, L, v).i_minus_j, "jh(H=L) != I-J");
    }
    return o;
}

Outcome norm_check() {
    Outcome o;
    std::mt19937 g(1002);
    auto models = surface_models();
    for (int i = 0; i < 500; ++i) {
        const auto& M = models[i % models.size()];
        DivisorClass L = rand_ample(M, g);
        EnergyReport r = norms(M, L, rand_chain(M, L, g, 1 + i % 3));
        Rational n = M.n;
        o.require(r.j > 0 && r.j / n <= r.i_minus_j && r.i_minus_j <= n * r.j, "norm inequality violated");
    }
    return o;
}

Outcome hodge_type_check() {
    Outcome o;
    std::mt19937 g(1003);
    std::vector<IntersectionModel> models{hirzebruch(1), hirzebruch(2), projective_plane()};
    int samples = 0;
    for (long tries = 0; samples < 1000 && tries < 200000; ++tries) {
        const auto& M = models[samples % 3];
        DivisorClass L = rand_ample(M, g), H = rand_class(M, g, 0, 3), C = rand_eff(M, g);
        if (intersect(M, {L, H}) < 0 || !is_nef(M, surface_b2(M, L, H)).holds || intersect(M, {L - C, H}) < 0)
            continue;
        o.require(surface_inequality_lhs(M, L, H, C) >= 0, "negative LHS on an irreducible surface");
        ++samples;
    }
    o.require(samples == 1000, "could not draw 1000 samples");
    auto gl = glued_blowups(Rational(1, 10), Rational(1, 100), Rational(1, 100000));
    o.require(surface_inequality_lhs(gl.dm, gl.L, gl.H, gl.C) < 0, "glued model LHS is not negative");
    return o;
}

Outcome newton_check() {
    Outcome o;
    json r = run_scenario("newton-example");
    o.require(r["pass"].get<bool>(), "newton-example scenario mismatch");
    return o;
}

Outcome criteria_check() {
    Outcome o;
    auto F1 = hirzebruch(1);
    int points = 0, fu_hits = 0, eps_hits = 0;
    for (int a = 1; a <= 10; ++a) {
        DivisorClass L{Rational(a, 2), Rational(a, 2) + 1};
        for (int b = 0; b < 20; ++b) {
            DivisorClass H{Rational(b % 5, 2), Rational(b / 5 + 1, 2) + Rational(b % 5, 3)};
            ++points;
            FuResult f = check_fu(F1, L, H);
            Classification c = classify_surface(F1, L, H);
            fu_hits += f.criterion == "uniform";
            eps_hits += c.epsilon.has_value();
            if (f.criterion == "uniform")
                o.require(c.verdict == Verdict::UniformlyStable, "check_fu passes but classification is not uniform");
            SwResult s = check_sw(F1, L, H, builtin_cycles(F1), F1.cycles_complete);
            if (c.epsilon) o.require(s.epsilon == *c.epsilon, "check_sw epsilon differs");
        }
    }
    o.require(points == 200, "grid size");
    o.require(fu_hits > 0 && eps_hits > fu_hits, "grid does not exercise the criteria");
    for (auto& M : surface_models()) {
        std::mt19937 g(1004);
        for (int i = 0; i < 20; ++i) {
            DivisorClass L = rand_ample(M, g), H = rand_ample(M, g);
            Classification c = classify_surface(M, L, H);
            if (c.epsilon)
                o.require(check_sw(M, L, H, builtin_cycles(M), true).epsilon == *c.epsilon, "check_sw epsilon differs");
        }
    }
    return o;
}

Outcome interval_check() {
    Outcome o;
    auto d = hirzebruch_family(1, 1, 2, 1);
    std::vector<Rational> ts;
    for (int i = 0; i <= 64; ++i) ts.push_back(Rational(i, 64));
    UjsReport u = ujs_section(d.model, d.H, ts);
    o.require(u.boundary_found, "no boundary class");
    for (auto& row : u.rows) {
        const Rational& t = row.coords[0];
        bool uniform = row.ample && row.cls.verdict == Verdict::UniformlyStable;
        o.require(uniform == (t > Rational(1, 2)), "uniform region is not (1/2, 1]");
        if (t == Rational(1, 2)) o.require(row.cls.verdict == Verdict::StableNotUniform, "t = 1/2 verdict");
    }
    o.require(u.matches_half_interval, "section report disagrees");
    return o;
}

Outcome determinism_check() {
    Outcome o;
    for (auto& name : scenario_names()) {
        int c1 = 0, c2 = 0;
        std::string a = run_cli("reproduce " + name, c1), b = run_cli("reproduce " + name, c2);
        o.require(c1 == 0 && c2 == 0, name + " did not pass");
        o.require(!a.empty() && a == b, name + " output differs between runs");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        double limit_s;  // 0 = no limit
    };
    std::vector<Criterion> all{
        {1, "Hirzebruch family boundary classes", hirzebruch_family_check, 1},
        {2, "threshold boundary and linearity", threshold_check, 1},
        {3, "decomposition oracle equivalence", oracle_check, 30},
        {4, "formula cross-identities", identity_check, 10},
        {5, "norm inequalities", norm_check, 0},
        {6, "surface inequality and glued counterexample", hodge_type_check, 0},
        {7, "Newton polyhedron certification", newton_check, 5},
        {8, "criteria consistency", criteria_check, 0},
        {9, "star convexity interval", interval_check, 0},
        {10, "reproduce determinism", determinism_check, 0},
    };
    int failed = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "over the time limit");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " (" << timing
                  << ")" << (o.pass ? "" : "  -- " + o.note) << "\n";
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
