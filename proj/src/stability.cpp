#include "jstab/stability.hpp"

#include <algorithm>

namespace jstab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Unstable: return "Unstable";
        case Verdict::Semistable: return "Semistable";
        case Verdict::StableNotUniform: return "StableNotUniform";
        case Verdict::UniformlyStable: return "UniformlyStable";
        case Verdict::SufficientOnly: return "SufficientOnly";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

void require_surface(const IntersectionModel& model) {
    if (model.n != 2) throw InputError("this operation needs a surface model (n = 2)");
}

void require_ample(const IntersectionModel& model, const DivisorClass& L) {
    if (!is_ample(model, L).holds) throw HypothesisError("L is not ample");
}

Rational hl_pairing(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H) {
    return intersect_powers(model, {{H, 1}, {L, model.n - 1}});
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer a = num(q), b = den(q);
    Integer ra = boost::multiprecision::sqrt(a), rb = boost::multiprecision::sqrt(b);
    if (ra * ra != a || rb * rb != b) return std::nullopt;
    return Rational(ra, rb);
}

}  // namespace

DivisorClass surface_b2(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H) {
    require_surface(model);
    Rational avg = intersect(model, {H, L}) / intersect(model, {L, L});
    return Rational(2) * avg * L - H;
}

Classification classify_surface(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H) {
    require_surface(model);
    require_ample(model, L);
    Classification c;
    c.b2 = surface_b2(model, L, H);
    c.h_pseffective = is_pseffective(model, H);
    c.h_big = is_big(model, H);
    c.h_ample = is_ample(model, H).holds;
    ConeVerdict nef = is_nef(model, c.b2);
    c.b2_values = nef.values;
    c.l_values = is_nef(model, L).values;
    if (!nef.holds) {
        c.verdict = Verdict::Unstable;
        c.witness = nef.witness;
        if (c.witness < static_cast<int>(model.curves.size())) c.witness_label = model.curves[c.witness].label;
        return c;
    }
    if (!c.h_pseffective) {
        c.verdict = Verdict::Inconclusive;
        return c;
    }
    if (is_ample(model, c.b2).holds) {
        if (!c.h_big) {
            c.verdict = Verdict::Semistable;
            return c;
        }
        Rational eps = c.b2_values[0] / c.l_values[0];
        for (size_t i = 1; i < c.b2_values.size(); ++i) eps = std::min(eps, c.b2_values[i] / c.l_values[i]);
        c.verdict = Verdict::UniformlyStable;
        c.epsilon = eps;
        return c;
    }
    c.verdict = c.h_ample ? Verdict::StableNotUniform : Verdict::Semistable;
    return c;
}

ThresholdReport threshold(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H) {
    require_surface(model);
    require_ample(model, L);
    ThresholdReport t;
    RVec kh = is_nef(model, H).values, kl = is_nef(model, L).values;
    bool first = true;
    for (size_t i = 0; i < kl.size(); ++i) {
        if (kl[i] <= 0) continue;
        Rational q = kh[i] / kl[i];
        if (first || q > t.ample_infimum) t.ample_infimum = q;
        first = false;
    }
    t.delta_pp = 2 * intersect(model, {H, L}) / intersect(model, {L, L}) - t.ample_infimum;
    t.h_pseffective = is_pseffective(model, H);
    t.pseff_threshold = pseff_threshold(model, H, L);
    t.not_uniform = classify_surface(model, L, H).verdict != Verdict::UniformlyStable;
    t.below_threshold = t.delta_pp < t.pseff_threshold;
    t.applicable = t.h_pseffective && t.same_average && (t.not_uniform || t.below_threshold);
    return t;
}

FuResult check_fu(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H) {
    const int n = model.n;
    if (n < 2) throw InputError("check_fu needs n ≥ 2");
    require_ample(model, L);
    FuResult r;
    Rational V = volume(model, L);
    r.h_dot = hl_pairing(model, L, H);
    Rational avg = r.h_dot / V;
    Rational N = n * n;
    r.test_class = N * avg * L - (N - 1) * H;
    ConeVerdict nef = is_nef(model, r.test_class);
    r.test_values = nef.values;
    if (r.h_dot > 0 && is_ample(model, r.test_class).holds) {
        RVec kh = is_nef(model, H).values, kl = is_nef(model, L).values;
        Rational d = r.h_dot / ((N - 1) * V);
        for (size_t i = 0; i < kl.size(); ++i) d = std::min(d, N / (N - 1) * avg - kh[i] / kl[i]);
        r.verdict = Verdict::SufficientOnly;
        r.criterion = "uniform";
        r.delta_star = d;
        r.epsilon = (N - 1) * d;
    } else if (r.h_dot >= 0 && nef.holds) {
        r.verdict = Verdict::SufficientOnly;
        r.criterion = "semistable";
    }
    return r;
}

ComparabilityResult comparability_bound(const IntersectionModel& model, const DivisorClass& L,
                                        const DivisorClass& H) {
    const int n = model.n;
    if (n < 2) throw InputError("comparability bound needs n ≥ 2");
    require_ample(model, L);
    // check_fu(±H + δL) passes iff ±H·L^{n−1} + δL^n ≥ 0 and ±C + δL is nef
    Rational V = volume(model, L);
    Rational avg = hl_pairing(model, L, H) / V;
    Rational N = n * n;
    DivisorClass C = N * avg * L - (N - 1) * H;
    RVec kc = is_nef(model, C).values, kl = is_nef(model, L).values;
    Rational delta = 0;
    for (int sign : {1, -1}) {
        delta = std::max(delta, Rational(-sign) * avg);
        for (size_t i = 0; i < kl.size(); ++i) delta = std::max(delta, Rational(-sign) * kc[i] / kl[i]);
    }
    ComparabilityResult out;
    out.delta = delta;
    out.plus = check_fu(model, L, H + delta * L);
    out.minus = check_fu(model, L, -H + delta * L);
    return out;
}

std::vector<Cycle> builtin_cycles(const IntersectionModel& model) {
    std::vector<Cycle> out;
    if (model.n != 2) return out;
    for (auto& c : model.curves) {
        Cycle cy;
        cy.label = c.label;
        cy.p = 1;
        cy.divisor = c.cls;
        out.push_back(cy);
    }
    return out;
}

SwResult check_sw(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                  const std::vector<Cycle>& cycles, bool complete) {
    const int n = model.n;
    require_ample(model, L);
    SwResult res;
    res.relative = !complete;
    Rational avg = hl_pairing(model, L, H) / volume(model, L);
    bool any = false;
    for (size_t c = 0; c < cycles.size(); ++c) {
        const Cycle& cy = cycles[c];
        SwRow row{cy.label, cy.p, 0, false};
        if (cy.p < 1 || cy.p > n) throw InputError("cycle dimension out of range");
        if (cy.p == n || cy.whole) {
            row.skipped = true;
            res.rows.push_back(row);
            continue;
        }
        Rational hl = cy.hl, lp = cy.lp;
        if (cy.divisor) {
            if (cy.p != n - 1) throw InputError("a divisor cycle has p = n − 1");
            hl = intersect_powers(model, {{H, 1}, {L, cy.p - 1}, {*cy.divisor, 1}});
            lp = intersect_powers(model, {{L, cy.p}, {*cy.divisor, 1}});
        }
        if (lp <= 0) throw InputError("cycle '" + cy.label + "' has L^p·V ≤ 0");
        row.value = (n * avg * lp - cy.p * hl) / ((n - cy.p) * lp);
        if (!any || row.value < res.epsilon) {
            res.epsilon = row.value;
            res.witness = static_cast<int>(c);
        }
        any = true;
        res.rows.push_back(row);
    }
    if (!any) return res;
    if (res.epsilon < 0)
        res.verdict = Verdict::Unstable;
    else if (res.epsilon > 0)
        res.verdict = Verdict::UniformlyStable;
    else
        res.verdict = Verdict::Semistable;
    return res;
}

MinimalModelResult check_minimal_model(const IntersectionModel& model, const DivisorClass& K, const DivisorClass& L,
                                       int m, const std::vector<Cycle>& cycles) {
    const int n = model.n;
    if (!is_nef(model, K).holds) throw HypothesisError("K is not nef");
    if (m < 0 || m > n) throw InputError("numerical dimension out of range");
    MinimalModelResult res;
    res.m = m;
    for (auto& cy : cycles) {
        MinimalModelRow row;
        row.label = cy.label;
        row.p = cy.p;
        row.j = cy.j;
        const int p = cy.p;
        for (int i = 0; i <= p; ++i) {
            Rational v;
            if (cy.whole) {
                if (p != n) throw InputError("a whole-space cycle has p = n");
                v = intersect_powers(model, {{K, i}, {L, p - i}});
            } else if (cy.divisor) {
                if (p != n - 1) throw InputError("a divisor cycle has p = n − 1");
                v = intersect_powers(model, {{K, i}, {L, p - i}, {*cy.divisor, 1}});
            } else {
                if (static_cast<int>(cy.k_pairings.size()) != p + 1)
                    throw InputError("cycle '" + cy.label + "' needs p + 1 pairings");
                v = cy.k_pairings[i];
            }
            row.pairings.push_back(v);
            row.coefficients.push_back(binom(p, i) * Rational(m - i) * v);
        }
        if (m < p) {
            for (int i = 0; i <= p && row.ok; ++i) {
                bool bad = i <= cy.j ? row.coefficients[i] < 0 : row.pairings[i] != 0;
                if (bad) {
                    row.ok = false;
                    row.witness = i;
                }
            }
        }
        res.pass = res.pass && row.ok;
        res.rows.push_back(row);
    }
    return res;
}

ProportionalResult check_proportional_components(const DeminormalModel& dm, const GlobalClass& L,
                                                 const GlobalClass& H, const std::vector<Rational>& t_grid) {
    if (dm.n() != 2) throw InputError("proportional-component check needs surfaces");
    ProportionalResult res;
    res.components_stable = true;
    for (size_t i = 0; i < dm.components.size(); ++i) {
        const auto& m = dm.components[i];
        Rational hh = intersect(m, {H[i], H[i]});
        if (hh == 0) throw InputError("H² vanishes on component " + std::to_string(i));
        res.ll_over_hh.push_back(intersect(m, {L[i], L[i]}) / hh);
        res.lh_over_hh.push_back(intersect(m, {L[i], H[i]}) / hh);
        Verdict v = classify_surface(m, L[i], H[i]).verdict;
        if (v != Verdict::StableNotUniform && v != Verdict::UniformlyStable) res.components_stable = false;
    }
    auto all_equal = [](const RVec& v) { return std::all_of(v.begin(), v.end(), [&](auto& x) { return x == v[0]; }); };
    res.ratios_equal = all_equal(res.ll_over_hh) && all_equal(res.lh_over_hh);
    res.components_stable = res.components_stable && check_same_average(dm, L, H).same;
    bool grid_ok = true;
    for (auto& t : t_grid) {
        if (t <= 0) continue;
        GlobalClass Lt;
        bool ok = true;
        for (size_t i = 0; i < dm.components.size(); ++i) {
            Lt.push_back(L[i] + t * H[i]);
            ok = ok && classify_surface(dm.components[i], Lt.back(), H[i]).verdict == Verdict::UniformlyStable;
        }
        ok = ok && check_same_average(dm, Lt, H).same;
        res.grid.push_back({t, ok});
        grid_ok = grid_ok && ok;
    }
    res.certified = res.ratios_equal && res.components_stable && grid_ok;
    return res;
}

namespace {

ScanRow scan_point(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                   std::vector<Rational> coords) {
    ScanRow row;
    row.coords = std::move(coords);
    row.L = L;
    try {
        row.ample = is_ample(model, L).holds;
        if (row.ample) {
            row.cls = classify_surface(model, L, H);
            row.delta_pp = threshold(model, L, H).delta_pp;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::vector<ScanRow> scan_segment(const IntersectionModel& model, const DivisorClass& M, const DivisorClass& H,
                                  const std::vector<Rational>& ts) {
    require_surface(model);
    std::vector<ScanRow> rows(ts.size());
    const long count = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) rows[i] = scan_point(model, (1 - ts[i]) * M + ts[i] * H, H, {ts[i]});
    return rows;
}

std::vector<ScanRow> scan_segment_serial(const IntersectionModel& model, const DivisorClass& M,
                                         const DivisorClass& H, const std::vector<Rational>& ts) {
    require_surface(model);
    std::vector<ScanRow> rows;
    for (auto& t : ts) rows.push_back(scan_point(model, (1 - t) * M + t * H, H, {t}));
    return rows;
}

std::vector<ScanRow> scan_plane(const IntersectionModel& model, const DivisorClass& H, const std::vector<Rational>& xs,
                                const std::vector<Rational>& ys) {
    require_surface(model);
    if (model.rho != 2) throw InputError("plane scan needs a rank-2 model");
    const long nx = static_cast<long>(xs.size()), ny = static_cast<long>(ys.size());
    std::vector<ScanRow> rows(nx * ny);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < nx * ny; ++idx) {
        const Rational& x = xs[idx / ny];
        const Rational& y = ys[idx % ny];
        rows[idx] = scan_point(model, DivisorClass{x, y}, H, {x, y});
    }
    return rows;
}

std::vector<ScanRow> scan_plane_serial(const IntersectionModel& model, const DivisorClass& H,
                                       const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    require_surface(model);
    if (model.rho != 2) throw InputError("plane scan needs a rank-2 model");
    std::vector<ScanRow> rows;
    for (auto& x : xs)
        for (auto& y : ys) rows.push_back(scan_point(model, DivisorClass{x, y}, H, {x, y}));
    return rows;
}

std::optional<DivisorClass> boundary_class(const IntersectionModel& model, const DivisorClass& H) {
    if (model.n != 2 || model.rho != 2) return std::nullopt;
    Rational hh = intersect(model, {H, H});
    if (hh <= 0) return std::nullopt;
    for (auto& k : model.nef_functionals) {
        if (k[0] == 0 && k[1] == 0) continue;
        for (int sign : {1, -1}) {
            DivisorClass d{sign * k[1], -sign * k[0]};
            if (!is_nef(model, d).holds) continue;
            Rational dd = intersect(model, {d, d});
            if (dd <= 0) continue;
            auto lambda = rational_sqrt(hh / dd);
            if (lambda) return *lambda * d;
        }
    }
    return std::nullopt;
}

UjsReport ujs_section(const IntersectionModel& model, const DivisorClass& H, const std::vector<Rational>& t_grid,
                      std::optional<DivisorClass> M) {
    require_surface(model);
    if (!is_ample(model, H).holds) throw HypothesisError("H is not ample");
    UjsReport rep;
    if (!M) M = boundary_class(model, H);
    if (!M) return rep;
    rep.boundary_found = true;
    rep.M = *M;
    rep.rows = scan_segment(model, *M, H, t_grid);
    bool matches = true;
    const Rational half(1, 2);
    for (auto& row : rep.rows) {
        const Rational& t = row.coords[0];
        bool uniform = row.ample && row.cls.verdict == Verdict::UniformlyStable;
        if (uniform) {
            if (!rep.uniform_lo || t < *rep.uniform_lo) rep.uniform_lo = t;
            if (!rep.uniform_hi || t > *rep.uniform_hi) rep.uniform_hi = t;
        }
        if (t >= 0 && t <= 1 && uniform != (t > half)) matches = false;
        if (t == half && !(row.ample && row.cls.verdict == Verdict::StableNotUniform)) matches = false;
    }
    rep.contiguous = true;
    if (rep.uniform_lo)
        for (auto& row : rep.rows) {
            const Rational& t = row.coords[0];
            if (t >= *rep.uniform_lo && t <= *rep.uniform_hi &&
                !(row.ample && row.cls.verdict == Verdict::UniformlyStable))
                rep.contiguous = false;
        }
    rep.matches_half_interval = matches;
    return rep;
}

}  // namespace jstab
