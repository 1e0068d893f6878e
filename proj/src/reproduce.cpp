#include "jstab/reproduce.hpp"

#include <functional>
#include <map>

namespace jstab {

HirzebruchData hirzebruch_family(int e, int m, int n, const Rational& a) {
    HirzebruchData d{hirzebruch(e), DivisorClass{m, n}, {}};
    Rational den = Rational(2 * n * m - m * m * e);
    if (den == 0) throw InputError("degenerate Hirzebruch family parameters");
    d.H = DivisorClass{Rational(m * m * e) * a / den, Rational(2 * n * (n - m * e) + m * m * e * e) * a / den};
    return d;
}

GluedExample glued_blowups(const Rational& eta, const Rational& delta, const Rational& eps) {
    GluedExample g{make_deminormal({blown_up_plane(), blown_up_plane()}), {}, {}, {}, {}, {}};
    g.L = {DivisorClass{delta, -eps}, DivisorClass{1, -eps}};
    g.H = {DivisorClass{delta, -eps / 3}, DivisorClass{Rational(1, 2) + eta, -eps / 3}};
    g.C = {DivisorClass{delta * (1 - eta), 0}, DivisorClass{0, 0}};
    g.M1 = {DivisorClass{1, 0}, DivisorClass{0, 0}};
    g.M2 = {DivisorClass{0, 0}, DivisorClass{1, 0}};
    for (auto& [k, v] : std::map<std::string, GlobalClass>{{"L", g.L}, {"H", g.H}, {"C", g.C}, {"M1", g.M1}, {"M2", g.M2}})
        g.dm.define(k, v);
    return g;
}

namespace {

using Values = std::vector<std::pair<std::string, std::string>>;

std::string b(bool x) { return x ? "true" : "false"; }

std::string levels_text(const LocalChain& c) {
    std::string s;
    for (size_t i = 0; i < c.levels.size(); ++i) {
        if (i) s += ";";
        for (size_t j = 0; j < c.levels[i].size(); ++j) {
            if (j) s += ",";
            s += num(c.levels[i][j]).str();
            if (!is_integral(c.levels[i][j])) s += "/" + den(c.levels[i][j]).str();
        }
    }
    return s;
}

MonomialFlagIdeal ideal(int k, std::vector<std::pair<std::vector<long>, long>> gens) {
    MonomialFlagIdeal a;
    a.k = k;
    for (auto& [e, t] : gens) {
        RVec v;
        for (long x : e) v.push_back(x);
        a.gens.push_back({v, t});
    }
    return a;
}

Values hirzebruch_jjj() {
    Values out;
    struct Case {
        std::string tag;
        int e, m, n;
    };
    for (auto& c : {Case{"e1", 1, 1, 2}, Case{"e2", 2, 1, 3}}) {
        auto d = hirzebruch_family(c.e, c.m, c.n, 1);
        const auto& X = d.model;
        DivisorClass C0 = X.basis(0);
        Classification cls = classify_surface(X, d.L, d.H);
        out.push_back({c.tag + ".H", format_class(X, d.H)});
        out.push_back({c.tag + ".B2", format_class(X, cls.b2)});
        out.push_back({c.tag + ".B2.C_0", to_string(intersect(X, {cls.b2, C0}))});
        out.push_back({c.tag + ".verdict", to_string(cls.verdict)});
        out.push_back({c.tag + ".leading_term.C_0", to_string(slope_leading_term(X, d.L, d.H, C0, 1, 1))});
        out.push_back({c.tag + ".delta_pp", to_string(threshold(X, d.L, d.H).delta_pp)});
    }
    auto d = hirzebruch_family(1, 1, 2, 1);
    out.push_back({"e1.energy.[C_0]", to_string(jh_energy(d.model, d.L, d.H, FlagChain{{d.model.basis(0)}}))});
    return out;
}

Values hodge_index_fail() {
    auto g = glued_blowups(Rational(1, 10), Rational(1, 100), Rational(1, 100000));
    return {{"M1.M1", to_string(intersect(g.dm, {g.M1, g.M1}))},
            {"M2.M2", to_string(intersect(g.dm, {g.M2, g.M2}))},
            {"M1.M2", to_string(intersect(g.dm, {g.M1, g.M2}))}};
}

Values glued_counterexample() {
    auto g = glued_blowups(Rational(1, 10), Rational(1, 100), Rational(1, 100000));
    Rational lhs = surface_inequality_lhs(g.dm, g.L, g.H, g.C);
    AverageCheck avg = check_same_average(g.dm, g.L, g.H);
    return {{"lhs.sign", lhs < 0 ? "negative" : (lhs == 0 ? "zero" : "positive")},
            {"same_average", b(avg.same)}};
}

Values newton_example() {
    Values out;
    auto two = ideal(1, {{{3}, 0}, {{0}, 4}});
    StarReport s = condition_star_check(two);
    ConicalPolyhedron P = newton_polyhedron(two);
    out.push_back({"two.star_ok", b(s.ok)});
    out.push_back({"two.failed_slice", std::to_string(s.failed_slice)});
    out.push_back({"two.slice_point", to_string(s.slice_points.at(0).at(0))});
    out.push_back({"two.contains(2,2)", b(contains(P, RVec{2, 2}))});
    out.push_back({"two.contains(1,1)", b(contains(P, RVec{1, 1}))});
    RescaleResult rs = minimal_rescale(two);
    StarReport sr = condition_star_check(rs.scaled);
    out.push_back({"two.l", rs.l.str()});
    out.push_back({"two.rescaled_chain", levels_text(sr.chain)});
    bool powers = true;
    for (int m = 1; m <= 4; ++m) powers = powers && star_power_check(sr.chain, 1, m);
    out.push_back({"two.star_power(m<=4)", b(powers)});

    auto three = ideal(2, {{{0, 0}, 2}, {{1, 0}, 1}, {{1, 1}, 0}});
    out.push_back({"three.dim_F", std::to_string(bounded_faces(newton_polyhedron(three)).dim)});
    out.push_back({"three.star_ok", b(condition_star_check(three).ok)});
    out.push_back({"three.star_power(m=2)", b(star_power_check(chain_from_generators(three), 2, 2))});
    RescaleResult r3 = minimal_rescale(three);
    out.push_back({"three.l", r3.l.str()});
    auto charts = fan_resolve(r3.scaled);
    out.push_back({"three.charts", std::to_string(charts.size())});
    for (size_t i = 0; i < charts.size(); ++i) {
        out.push_back({"three.chart" + std::to_string(i) + ".chain", levels_text(charts[i].chain)});
        out.push_back({"three.chart" + std::to_string(i) + ".verified",
                       b(charts[i].monotone && charts[i].one_dimensional)});
    }
    return out;
}

Values slope_example() {
    Values out;
    auto d = hirzebruch_family(1, 1, 2, 1);
    SlopeEnergy s = slope_energy(d.model, d.L, d.H, d.model.basis(0), 1);
    for (size_t p = 0; p < s.coefficients.size(); ++p)
        out.push_back({"F_1.c^" + std::to_string(p), to_string(s.coefficients[p])});
    out.push_back({"F_1.value(c=1)", to_string(s.value)});
    auto P2 = projective_plane();
    SlopeEnergy q = slope_energy(P2, DivisorClass{2}, DivisorClass{1}, DivisorClass{1}, 1);
    out.push_back({"P2.value(c=1)", to_string(q.value)});
    return out;
}

Values plane_energy() {
    Values out;
    auto P2 = projective_plane();
    DivisorClass L{2}, h{1};
    FlagChain c{{h}};
    EnergyReport r = energy_report(P2, L, h, c);
    out.push_back({"[h].e_flag", to_string(e_flag(P2, L, c))});
    out.push_back({"[h].E", to_string(r.e)});
    out.push_back({"[h].J", to_string(r.j)});
    out.push_back({"[h].I-J", to_string(r.i_minus_j)});
    out.push_back({"[h].I", to_string(r.i)});
    out.push_back({"[h].J^H", to_string(r.jh)});
    out.push_back({"[h].oracle_e", lattice_count_oracle(P2, L, c, 6).fitted_e.str()});
    out.push_back({"[h;h].e_flag", to_string(e_flag(P2, L, FlagChain{{h, h}}))});
    out.push_back({"[2h;h].e_flag", to_string(e_flag(P2, L, FlagChain{{Rational(2) * h, h}}))});
    return out;
}

Values dyre_interval() {
    auto d = hirzebruch_family(1, 1, 2, 1);
    std::vector<Rational> ts;
    for (int i = 0; i <= 64; ++i) ts.push_back(Rational(i, 64));
    UjsReport u = ujs_section(d.model, d.H, ts);
    std::string half;
    for (auto& row : u.rows)
        if (row.coords[0] == Rational(1, 2)) half = to_string(row.cls.verdict);
    return {{"M", format_class(d.model, u.M)},
            {"uniform_lo", u.uniform_lo ? to_string(*u.uniform_lo) : "none"},
            {"uniform_hi", u.uniform_hi ? to_string(*u.uniform_hi) : "none"},
            {"t=1/2", half},
            {"matches_(1/2,1]", b(u.matches_half_interval)}};
}

struct Scenario {
    std::function<Values()> run;
    Values expected;
};

const std::map<std::string, Scenario>& scenarios() {
    static const std::map<std::string, Scenario> table = {
        {"hirzebruch-jjj",
         {hirzebruch_jjj,
          {{"e1.H", "1/3*C_0,5/3*f"},
           {"e1.B2", "1/1*C_0,1/1*f"},
           {"e1.B2.C_0", "0/1"},
           {"e1.verdict", "StableNotUniform"},
           {"e1.leading_term.C_0", "0/1"},
           {"e1.delta_pp", "0/1"},
           {"e2.H", "1/2*C_0,5/2*f"},
           {"e2.B2", "1/1*C_0,2/1*f"},
           {"e2.B2.C_0", "0/1"},
           {"e2.verdict", "StableNotUniform"},
           {"e2.leading_term.C_0", "0/1"},
           {"e2.delta_pp", "0/1"},
           {"e1.energy.[C_0]", "4/27"}}}},
        {"hodge-index-fail", {hodge_index_fail, {{"M1.M1", "1/1"}, {"M2.M2", "1/1"}, {"M1.M2", "0/1"}}}},
        {"glued-counterexample", {glued_counterexample, {{"lhs.sign", "negative"}, {"same_average", "false"}}}},
        {"newton-example",
         {newton_example,
          {{"two.star_ok", "false"},
           {"two.failed_slice", "1"},
           {"two.slice_point", "9/4"},
           {"two.contains(2,2)", "true"},
           {"two.contains(1,1)", "false"},
           {"two.l", "4"},
           {"two.rescaled_chain", "12;9;6;3"},
           {"two.star_power(m<=4)", "true"},
           {"three.dim_F", "2"},
           {"three.star_ok", "false"},
           {"three.star_power(m=2)", "false"},
           {"three.l", "2"},
           {"three.charts", "2"},
           {"three.chart0.chain", "2,2;1,1"},
           {"three.chart0.verified", "true"},
           {"three.chart1.chain", "2,2;2,0"},
           {"three.chart1.verified", "true"}}}},
        {"slope-example",
         {slope_example,
          {{"F_1.c^0", "0/1"},
           {"F_1.c^1", "0/1"},
           {"F_1.c^2", "0/1"},
           {"F_1.c^3", "4/27"},
           {"F_1.value(c=1)", "4/27"},
           {"P2.value(c=1)", "1/6"}}}},
        {"plane-energy",
         {plane_energy,
          {{"[h].e_flag", "5/1"},
           {"[h].E", "-5/12"},
           {"[h].J", "5/12"},
           {"[h].I-J", "1/3"},
           {"[h].I", "3/4"},
           {"[h].J^H", "1/6"},
           {"[h].oracle_e", "5"},
           {"[h;h].e_flag", "14/1"},
           {"[2h;h].e_flag", "16/1"}}}},
        {"dyre-interval",
         {dyre_interval,
          {{"M", "1/1*C_0,1/1*f"},
           {"uniform_lo", "33/64"},
           {"uniform_hi", "1/1"},
           {"t=1/2", "StableNotUniform"},
           {"matches_(1/2,1]", "true"}}}},
    };
    return table;
}

}  // namespace

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (auto& [k, v] : scenarios()) names.push_back(k);
    return names;
}

json run_scenario(const std::string& name) {
    auto it = scenarios().find(name);
    if (it == scenarios().end()) throw InputError("unknown scenario '" + name + "'");
    Values got = it->second.run();
    std::map<std::string, std::string> actual(got.begin(), got.end());
    json checks = json::array();
    bool pass = true;
    for (auto& [key, want] : it->second.expected) {
        auto f = actual.find(key);
        std::string have = f == actual.end() ? "<missing>" : f->second;
        bool ok = have == want;
        pass = pass && ok;
        checks.push_back({{"key", key}, {"value", have}, {"expected", want}, {"match", ok}});
    }
    return {{"scenario", name}, {"checks", checks}, {"pass", pass}};
}

}  // namespace jstab
