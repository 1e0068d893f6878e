#include "jstab/energy.hpp"

namespace jstab {

namespace {

DivisorClass level(const IntersectionModel& model, const FlagChain& chain, size_t k) {
    return k < chain.levels.size() ? chain.levels[k] : model.zero();
}

void require_positive_volume(const Rational& v) {
    if (v <= 0) throw HypothesisError("L^n must be positive");
}

}  // namespace

ChainCheck check_chain(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain) {
    ChainCheck c;
    c.almost_trivial = true;
    for (size_t k = 0; k < chain.levels.size(); ++k) {
        if (!chain.levels[k].zero()) c.almost_trivial = false;
        if (c.valid && !is_pseffective(model, chain.levels[k] - level(model, chain, k + 1))) {
            c.valid = false;
            c.bad_link = static_cast<int>(k);
        }
        if (c.nef_ok && !is_nef(model, L - chain.levels[k]).holds) {
            c.nef_ok = false;
            c.nef_level = static_cast<int>(k);
        }
    }
    return c;
}

Rational mixed_multiplicity(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& A,
                            const DivisorClass& B, int j) {
    const int n = model.n;
    if (j < 0 || j > n) throw InputError("mixed multiplicity index out of range");
    return volume(model, L) - intersect_powers(model, {{L - A, j}, {L - B, n - j}});
}

Rational restricted_mixed_multiplicity(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                       const DivisorClass& A, const DivisorClass& B, int j) {
    const int n = model.n;
    if (n == 1) return 0;
    if (j < 0 || j > n - 1) throw InputError("restricted mixed multiplicity index out of range");
    return intersect_powers(model, {{H, 1}, {L, n - 1}}) -
           intersect_powers(model, {{H, 1}, {L - A, j}, {L - B, n - 1 - j}});
}

Rational e_flag(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain) {
    Rational s = 0;
    for (size_t k = 0; k < chain.levels.size(); ++k)
        for (int j = 0; j <= model.n; ++j)
            s += mixed_multiplicity(model, L, chain.levels[k], level(model, chain, k + 1), j);
    return s / Rational(chain.l);
}

namespace {

// per-link jh numerators before division by l·V
RVec jh_links(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H, const FlagChain& chain) {
    const int n = model.n;
    Rational V = volume(model, L);
    require_positive_volume(V);
    Rational avg = intersect_powers(model, {{H, 1}, {L, n - 1}}) / V;
    RVec out;
    for (size_t k = 0; k < chain.levels.size(); ++k) {
        DivisorClass A = chain.levels[k], B = level(model, chain, k + 1);
        Rational e = 0, eh = 0;
        for (int j = 0; j <= n; ++j) e += mixed_multiplicity(model, L, A, B, j);
        for (int j = 0; j <= n - 1 && n >= 2; ++j) eh += restricted_mixed_multiplicity(model, L, H, A, B, j);
        out.push_back(Rational(n, n + 1) * avg * e - eh);
    }
    return out;
}

}  // namespace

Rational jh_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                   const FlagChain& chain) {
    Rational s = 0;
    for (auto& x : jh_links(model, L, H, chain)) s += x;
    return s / (Rational(chain.l) * volume(model, L));
}

SurfaceEnergy surface_chain_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                   const FlagChain& chain) {
    if (model.n != 2) throw InputError("surface chain energy needs n = 2");
    auto dot2 = [&](const DivisorClass& a, const DivisorClass& b) { return intersect(model, {a, b}); };
    Rational L2 = dot2(L, L), LH = dot2(L, H);
    require_positive_volume(L2);
    SurfaceEnergy out;
    Rational total = 0;
    for (size_t k = 0; k < chain.levels.size(); ++k) {
        DivisorClass A = chain.levels[k], B = level(model, chain, k + 1);
        Rational T = 6 * dot2(A + B, L) * LH - 3 * dot2(A + B, H) * L2 -
                     2 * LH * (dot2(A, A) + dot2(A, B) + dot2(B, B));
        out.terms.push_back(T);
        total += T;
    }
    out.value = total / (3 * L2 * L2 * Rational(chain.l));
    return out;
}

EnergyReport energy_report(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                           const FlagChain& chain) {
    EnergyReport rep;
    ChainCheck cc = check_chain(model, L, chain);
    rep.almost_trivial = cc.almost_trivial;
    rep.advisory_nef_failed = !cc.nef_ok;
    const int n = model.n;
    Rational V = volume(model, L);
    require_positive_volume(V);
    Rational lV = Rational(chain.l) * V;
    RVec h = jh_links(model, L, H, chain);
    RVec self = jh_links(model, L, L, chain);
    Rational ef = 0, ij = 0, jh = 0;
    for (size_t k = 0; k < chain.levels.size(); ++k) {
        Rational e = 0;
        for (int j = 0; j <= n; ++j)
            e += mixed_multiplicity(model, L, chain.levels[k], level(model, chain, k + 1), j);
        e /= Rational(chain.l);
        rep.per_link.push_back({e, h[k] / lV});
        ef += e;
        ij += self[k] / lV;
        jh += h[k] / lV;
    }
    rep.e = -ef / (Rational(n + 1) * V);
    rep.j = -rep.e;
    rep.i_minus_j = ij;
    rep.i = rep.j + rep.i_minus_j;
    rep.jh = jh;
    return rep;
}

EnergyReport norms(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain) {
    return energy_report(model, L, L, chain);
}

SlopeEnergy slope_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                         const DivisorClass& D, const Rational& c) {
    if (c <= 0) throw InputError("slope parameter c must be positive");
    const int n = model.n;
    Rational V = volume(model, L);
    require_positive_volume(V);
    Rational avg = intersect_powers(model, {{H, 1}, {L, n - 1}}) / V;
    Rational w = Rational(n, n + 1) * avg;
    // V·J^H = c·[Σ_{i<n} H·(L−cD)^i·L^{n−1−i} − w·Σ_{i≤n} (L−cD)^i·L^{n−i}]
    RVec coef(n + 2, Rational(0));
    for (int i = 0; i <= n - 1; ++i)
        for (int a = 0; a <= i; ++a) {
            Rational sign = a % 2 ? -1 : 1;
            coef[a + 1] += sign * binom(i, a) * intersect_powers(model, {{H, 1}, {D, a}, {L, n - 1 - a}});
        }
    for (int i = 0; i <= n; ++i)
        for (int a = 0; a <= i; ++a) {
            Rational sign = a % 2 ? -1 : 1;
            coef[a + 1] -= w * sign * binom(i, a) * intersect_powers(model, {{D, a}, {L, n - a}});
        }
    SlopeEnergy out;
    Rational pw = 1, val = 0;
    for (auto& x : coef) {
        x /= V;
        val += x * pw;
        pw *= c;
    }
    out.coefficients = coef;
    out.value = val;
    return out;
}

Rational slope_leading_term(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                            const Rational& hl, const Rational& lp, int p, const Rational& mult) {
    const int n = model.n;
    if (p < 1 || p > n - 1) throw InputError("cycle dimension p out of range");
    if (mult <= 0) throw InputError("multiplicity must be positive");
    Rational V = volume(model, L);
    require_positive_volume(V);
    Rational avg = intersect_powers(model, {{H, 1}, {L, n - 1}}) / V;
    return factorial(n) / (factorial(n - p + 1) * factorial(p)) * mult * (n * avg * lp - p * hl);
}

Rational slope_leading_term(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                            const DivisorClass& V, int p, const Rational& mult) {
    const int n = model.n;
    if (p != n - 1) throw InputError("a divisor cycle has p = n − 1");
    Rational hl = intersect_powers(model, {{H, 1}, {L, p - 1}, {V, 1}});
    Rational lp = intersect_powers(model, {{L, p}, {V, 1}});
    return slope_leading_term(model, L, H, hl, lp, p, mult);
}

Rational surface_inequality_lhs(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                const DivisorClass& C) {
    if (model.n != 2) throw InputError("surface inequality needs n = 2");
    auto d = [&](const DivisorClass& a, const DivisorClass& b) { return intersect(model, {a, b}); };
    return 2 * d(C, L) * d(L, H) - d(C, H) * d(L, L) - d(L, H) * d(C, C);
}

Rational surface_inequality_lhs(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H,
                                const GlobalClass& C) {
    if (dm.n() != 2) throw InputError("surface inequality needs n = 2");
    auto d = [&](const GlobalClass& a, const GlobalClass& b) { return intersect(dm, {a, b}); };
    return 2 * d(C, L) * d(L, H) - d(C, H) * d(L, L) - d(L, H) * d(C, C);
}

FlagChain expand_chain(const FlagChain& chain, int m) {
    if (m < 1) throw InputError("power must be at least 1");
    FlagChain out;
    out.l = chain.l;
    const long r = static_cast<long>(chain.levels.size());
    if (r == 0) return out;
    DivisorClass zero = Rational(0) * chain.levels[0];
    auto lev = [&](long j) { return j < r ? chain.levels[j] : zero; };
    for (long k = 0; k < m * r; ++k) {
        long j = k / m, i = k - m * j;
        out.levels.push_back(Rational(m - i) * lev(j) + Rational(i) * lev(j + 1));
    }
    return out;
}

DeminormalResult deminormal_energy(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H,
                                   const std::vector<FlagChain>& chains) {
    if (chains.size() != dm.components.size()) throw InputError("need one chain per component");
    AverageCheck avg = check_same_average(dm, L, H);
    if (!avg.same) return avg;
    EnergyReport out;
    Rational Vsum = 0;
    out.almost_trivial = true;
    for (size_t i = 0; i < dm.components.size(); ++i) {
        const auto& m = dm.components[i];
        Rational V = volume(m, L[i]);
        EnergyReport r = energy_report(m, L[i], H[i], chains[i]);
        Vsum += V;
        out.jh += V * r.jh;
        out.j += V * r.j;
        out.i_minus_j += V * r.i_minus_j;
        out.i += V * r.i;
        out.e += V * r.e;
        for (auto& link : r.per_link) out.per_link.push_back({V * link.e_flag, V * link.jh});
        out.almost_trivial = out.almost_trivial && r.almost_trivial;
        out.advisory_nef_failed = out.advisory_nef_failed || r.advisory_nef_failed;
    }
    out.jh /= Vsum;
    out.j /= Vsum;
    out.i_minus_j /= Vsum;
    out.i /= Vsum;
    out.e /= Vsum;
    for (auto& link : out.per_link) {
        link.e_flag /= Vsum;
        link.jh /= Vsum;
    }
    return out;
}

}  // namespace jstab
