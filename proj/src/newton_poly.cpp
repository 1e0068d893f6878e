#include "jstab/newton_poly.hpp"

#include "jstab/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace jstab {

namespace {

RVec unit(int dim, int i) {
    RVec v(dim, Rational(0));
    v[i] = 1;
    return v;
}

bool in_hull(const std::vector<RVec>& pts, const std::vector<RVec>& rays, const RVec& x) {
    const int np = static_cast<int>(pts.size()), nr = static_cast<int>(rays.size());
    const int dim = static_cast<int>(x.size());
    if (np == 0) return false;
    LinearProgram lp(np + nr);
    for (int d = 0; d < dim; ++d) {
        RVec row(np + nr);
        for (int i = 0; i < np; ++i) row[i] = pts[i][d];
        for (int j = 0; j < nr; ++j) row[np + j] = rays[j][d];
        lp.add(row, Sense::EQ, x[d]);
    }
    RVec sum(np + nr, Rational(0));
    for (int i = 0; i < np; ++i) sum[i] = 1;
    lp.add(sum, Sense::EQ, 1);
    return feasible(lp);
}

std::vector<RVec> irredundant(std::vector<RVec> pts, const std::vector<RVec>& rays) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (size_t i = 0; i < pts.size();) {
        std::vector<RVec> others;
        for (size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (in_hull(others, rays, pts[i]))
            pts.erase(pts.begin() + i);
        else
            ++i;
    }
    return pts;
}

int affine_dim(const std::vector<RVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<RVec> rows;
    for (size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
    int rank = 0;
    size_t cols = rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                p = static_cast<int>(i);
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = rank + 1; i < rows.size(); ++i) {
            Rational f = rows[i][c] / rows[rank][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

RVec exponent_of(const RVec& v) { return RVec(v.begin(), v.end() - 1); }

bool orthant(const MonomialFlagIdeal& a) { return a.rays.empty(); }

bool pointed(const std::vector<RVec>& rays) {
    // some convex combination of the rays vanishing means a line in the cone
    if (rays.empty()) return true;
    const int nr = static_cast<int>(rays.size());
    const int dim = static_cast<int>(rays[0].size());
    LinearProgram lp(nr);
    for (int d = 0; d < dim; ++d) {
        RVec row(nr);
        for (int j = 0; j < nr; ++j) row[j] = rays[j][d];
        lp.add(row, Sense::EQ, 0);
    }
    lp.add(RVec(nr, Rational(1)), Sense::EQ, 1);
    return !feasible(lp);
}

bool in_cone(const std::vector<RVec>& rays, const RVec& x) {
    if (is_zero(x)) return true;
    const int nr = static_cast<int>(rays.size());
    LinearProgram lp(nr);
    for (size_t d = 0; d < x.size(); ++d) {
        RVec row(nr);
        for (int j = 0; j < nr; ++j) row[j] = rays[j][d];
        lp.add(row, Sense::EQ, x[d]);
    }
    return feasible(lp);
}

}  // namespace

std::vector<RVec> exponent_rays(const MonomialFlagIdeal& a) {
    if (!a.rays.empty()) return a.rays;
    std::vector<RVec> r;
    for (int i = 0; i < a.k; ++i) r.push_back(unit(a.k, i));
    return r;
}

void validate(const MonomialFlagIdeal& a) {
    if (a.k < 0) throw InputError("k must be nonnegative");
    if (a.gens.empty()) throw InputError("flag ideal has no generators");
    bool head = false, tail = false;
    for (auto& g : a.gens) {
        if (static_cast<int>(g.exp.size()) != a.k) throw InputError("generator exponent has wrong length");
        if (g.t < 0) throw InputError("negative t-order");
        if (orthant(a))
            for (auto& x : g.exp)
                if (x < 0) throw InputError("negative exponent in an orthant chart");
        if (g.t == 0) head = true;
        if (is_zero(g.exp)) tail = true;
    }
    if (!head) throw InputError("no generator of t-order 0 (translate first)");
    if (!tail) throw InputError("no pure power of t among the generators");
    for (auto& r : a.rays)
        if (static_cast<int>(r.size()) != a.k) throw InputError("ray has wrong length");
    if (!pointed(a.rays)) throw InputError("recession cone is not pointed");
}

long translate(MonomialFlagIdeal& a) {
    if (a.gens.empty()) return 0;
    long s = a.gens.front().t;
    for (auto& g : a.gens) s = std::min(s, g.t);
    for (auto& g : a.gens) g.t -= s;
    return s;
}

ConicalPolyhedron newton_polyhedron(const MonomialFlagIdeal& a) {
    validate(a);
    ConicalPolyhedron P;
    P.k = a.k;
    for (auto& r : exponent_rays(a)) {
        RVec v = r;
        v.push_back(0);
        P.rays.push_back(v);
    }
    P.rays.push_back(unit(a.k + 1, a.k));
    std::vector<RVec> pts;
    for (auto& g : a.gens) {
        RVec v = g.exp;
        v.push_back(g.t);
        pts.push_back(v);
    }
    P.vertices = irredundant(pts, P.rays);
    return P;
}

bool contains(const ConicalPolyhedron& P, const RVec& point) {
    if (static_cast<int>(point.size()) != P.k + 1) throw InputError("point has wrong dimension");
    return in_hull(P.vertices, P.rays, point);
}

long t_length(const ConicalPolyhedron& P) {
    bool found = false;
    Rational best;
    for (auto& v : P.vertices)
        if (is_zero(exponent_of(v)) && (!found || v.back() < best)) {
            best = v.back();
            found = true;
        }
    if (!found) throw InputError("polyhedron has no pure t-power vertex");
    return num(best).convert_to<long>();
}

std::vector<RVec> slice_vertices(const ConicalPolyhedron& P, const Rational& m) {
    long r = t_length(P);
    if (m < 0 || m > r) throw InputError("slice level outside [0, r]");
    std::vector<RVec> cand;
    for (auto& v : P.vertices)
        if (v.back() <= m) cand.push_back(exponent_of(v));
    for (auto& a : P.vertices)
        for (auto& b : P.vertices) {
            if (!(a.back() < m && m < b.back())) continue;
            Rational s = (m - a.back()) / (b.back() - a.back());
            cand.push_back(exponent_of(a + s * (b - a)));
        }
    std::vector<RVec> rays;
    for (auto& r2 : P.rays)
        if (r2.back() == 0) rays.push_back(exponent_of(r2));
    return irredundant(cand, rays);
}

FaceComplex bounded_faces(const ConicalPolyhedron& P) {
    const int N = static_cast<int>(P.vertices.size());
    const int dim = P.k + 1;
    if (N > 24) throw ResourceError("too many vertices for bounded-face enumeration");
    // S lies on a bounded face iff some w has w·ρ ≥ 1 on rays, w·v = c on S, w·u ≥ c elsewhere
    auto feasible_set = [&](const std::vector<int>& S) {
        LinearProgram lp(dim + 1);
        for (int i = 0; i <= dim; ++i) lp.is_free[i] = true;
        for (auto& r : P.rays) {
            RVec row = r;
            row.push_back(0);
            lp.add(row, Sense::GE, 1);
        }
        std::vector<bool> in(N, false);
        for (int i : S) in[i] = true;
        for (int i = 0; i < N; ++i) {
            RVec row = P.vertices[i];
            row.push_back(-1);
            lp.add(row, in[i] ? Sense::EQ : Sense::GE, 0);
        }
        return feasible(lp);
    };
    std::map<std::vector<int>, bool> memo;
    auto ok = [&](const std::vector<int>& S) {
        auto it = memo.find(S);
        if (it != memo.end()) return it->second;
        return memo[S] = feasible_set(S);
    };
    std::set<std::vector<int>> level;
    for (int i = 0; i < N; ++i) level.insert({i});
    FaceComplex fc;
    while (!level.empty()) {
        std::set<std::vector<int>> next;
        for (auto& S : level) {
            bool extended = false;
            for (int j = 0; j < N; ++j) {
                if (std::binary_search(S.begin(), S.end(), j)) continue;
                auto T = S;
                T.insert(std::upper_bound(T.begin(), T.end(), j), j);
                if (ok(T)) {
                    next.insert(T);
                    extended = true;
                }
            }
            if (!extended) fc.maximal_faces.push_back(S);
        }
        level = std::move(next);
    }
    std::sort(fc.maximal_faces.begin(), fc.maximal_faces.end());
    fc.face_dims.clear();
    for (auto& S : fc.maximal_faces) {
        std::vector<RVec> pts;
        for (int i : S) pts.push_back(P.vertices[i]);
        fc.face_dims.push_back(affine_dim(pts));
        fc.dim = std::max(fc.dim, fc.face_dims.back());
    }
    return fc;
}

namespace {

StarReport star_on(const ConicalPolyhedron& P, const std::vector<RVec>& exp_rays) {
    StarReport rep;
    long r = t_length(P);
    FaceComplex fc = bounded_faces(P);
    rep.dim_F = fc.dim;
    rep.chain.r = r;
    if (r == 0) {
        rep.ok = true;
        rep.almost_trivial = true;
        return rep;
    }
    if (fc.dim != 1) {
        for (size_t i = 0; i < fc.maximal_faces.size(); ++i)
            if (fc.face_dims[i] >= 2) {
                rep.bad_face = fc.maximal_faces[i];
                break;
            }
        rep.reason = "bounded part has dimension " + std::to_string(fc.dim);
        return rep;
    }
    for (long m = 0; m <= r; ++m) {
        std::vector<RVec> pts;
        for (auto& S : fc.maximal_faces) {
            if (S.size() == 1) {
                if (P.vertices[S[0]].back() == m) pts.push_back(exponent_of(P.vertices[S[0]]));
                continue;
            }
            const RVec& a = P.vertices[S[0]];
            const RVec& b = P.vertices[S[1]];
            if (a.back() == m) pts.push_back(exponent_of(a));
            if (b.back() == m) pts.push_back(exponent_of(b));
            const RVec& lo = a.back() < b.back() ? a : b;
            const RVec& hi = a.back() < b.back() ? b : a;
            if (lo.back() < m && m < hi.back())
                pts.push_back(exponent_of(lo + ((m - lo.back()) / (hi.back() - lo.back())) * (hi - lo)));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        bool integral = pts.size() == 1 &&
                        std::all_of(pts[0].begin(), pts[0].end(), [](const Rational& q) { return is_integral(q); });
        if (!integral) {
            rep.failed_slice = m;
            rep.slice_points = pts;
            rep.reason = pts.size() == 1 ? "non-integral slice point" : "slice of F is not a single point";
            return rep;
        }
        if (m < r) rep.chain.levels.push_back(pts[0]);
    }
    for (long m = 0; m < r; ++m) {
        RVec next = m + 1 < r ? rep.chain.levels[m + 1] : RVec(P.k, Rational(0));
        if (!in_cone(exp_rays, rep.chain.levels[m] - next)) {
            rep.failed_slice = m;
            rep.reason = "levels are not monotone";
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace

StarReport condition_star_check(const MonomialFlagIdeal& a) {
    return star_on(newton_polyhedron(a), exponent_rays(a));
}

RescaleResult minimal_rescale(const MonomialFlagIdeal& a) {
    ConicalPolyhedron P = newton_polyhedron(a);
    long r = t_length(P);
    std::vector<std::vector<RVec>> slices;
    Integer l = 1;
    for (long m = 0; m <= r; ++m) {
        slices.push_back(slice_vertices(P, m));
        for (auto& v : slices.back())
            for (auto& x : v) l = lcm(l, den(x));
    }
    RescaleResult out;
    out.l = l;
    out.scaled.k = a.k;
    out.scaled.rays = a.rays;
    for (long m = 0; m <= r; ++m)
        for (auto& v : slices[m]) out.scaled.gens.push_back({Rational(l) * v, m});
    return out;
}

namespace {

struct SliceData {
    ConicalPolyhedron P;
    long r = 0;
    std::vector<std::vector<RVec>> slices;  // m = 0 .. r-1
};

SliceData integral_slices(const MonomialFlagIdeal& a) {
    SliceData sd;
    sd.P = newton_polyhedron(a);
    sd.r = t_length(sd.P);
    for (long m = 0; m < sd.r; ++m) {
        sd.slices.push_back(slice_vertices(sd.P, m));
        for (auto& v : sd.slices.back())
            for (auto& x : v)
                if (!is_integral(x)) throw HypothesisError("slice vertices are not integral; rescale first");
    }
    return sd;
}

}  // namespace

std::vector<Chart> fan_resolve(const MonomialFlagIdeal& a) {
    if (!pointed(a.rays)) throw InputError("recession cone is not pointed");
    SliceData sd = integral_slices(a);
    const auto rays = exponent_rays(a);
    const int k = a.k;
    std::vector<Chart> charts;
    std::vector<int> pick;
    std::vector<RVec> ineq;

    auto system = [&](const std::vector<RVec>& extra) {
        LinearProgram lp(k);
        for (int i = 0; i < k; ++i) lp.is_free[i] = true;
        for (auto& r : rays) lp.add(r, Sense::GE, 1);
        for (auto& v : extra) lp.add(v, Sense::GE, 1);
        return lp;
    };

    std::function<void(long)> descend = [&](long m) {
        if (m == sd.r) {
            auto res = solve(system(ineq));
            Chart c;
            c.interior = res.x;
            c.inequalities = ineq;
            c.selected = pick;
            c.chain.r = sd.r;
            for (long j = 0; j < sd.r; ++j) c.chain.levels.push_back(sd.slices[j][pick[j]]);
            charts.push_back(std::move(c));
            return;
        }
        const auto& S = sd.slices[m];
        for (size_t s = 0; s < S.size(); ++s) {
            size_t mark = ineq.size();
            for (size_t u = 0; u < S.size(); ++u)
                if (u != s) ineq.push_back(S[u] - S[s]);
            if (feasible(system(ineq))) {
                pick.push_back(static_cast<int>(s));
                descend(m + 1);
                pick.pop_back();
            }
            ineq.resize(mark);
        }
    };
    descend(0);

    for (auto& c : charts) {
        // closed cone: n·ρ ≥ 0, n·v ≥ 0; monotone iff n·(D_m − D_{m+1}) ≥ 0 throughout
        c.monotone = true;
        for (long m = 0; m < sd.r && c.monotone; ++m) {
            RVec next = m + 1 < sd.r ? c.chain.levels[m + 1] : RVec(k, Rational(0));
            LinearProgram lp(k);
            for (int i = 0; i < k; ++i) lp.is_free[i] = true;
            for (auto& r : rays) lp.add(r, Sense::GE, 0);
            for (auto& v : c.inequalities) lp.add(v, Sense::GE, 0);
            lp.add(c.chain.levels[m] - next, Sense::LE, -1);
            if (feasible(lp)) c.monotone = false;
        }
        MonomialFlagIdeal local;
        local.k = k;
        local.rays = rays;
        for (auto& v : c.inequalities) local.rays.push_back(v);
        for (auto& v : sd.P.vertices) local.gens.push_back({exponent_of(v), num(v.back()).convert_to<long>()});
        StarReport rep = condition_star_check(local);
        c.one_dimensional = rep.ok && rep.dim_F == 1 && rep.chain.levels == c.chain.levels;
    }
    return charts;
}

LocalChain select_chain(const MonomialFlagIdeal& a, const RVec& n) {
    SliceData sd = integral_slices(a);
    LocalChain c;
    c.r = sd.r;
    for (auto& S : sd.slices) {
        // slices are sorted, so the first minimum is the lexicographic one
        size_t best = 0;
        for (size_t i = 1; i < S.size(); ++i)
            if (dot(n, S[i]) < dot(n, S[best])) best = i;
        c.levels.push_back(S[best]);
    }
    return c;
}

MonomialFlagIdeal chain_ideal(const LocalChain& chain, int k) {
    MonomialFlagIdeal a;
    a.k = k;
    for (long j = 0; j < chain.r; ++j) a.gens.push_back({chain.levels[j], j});
    a.gens.push_back({RVec(k, Rational(0)), chain.r});
    return a;
}

std::vector<Generator> minimal_generators(std::vector<Generator> gens) {
    auto le = [](const Generator& x, const Generator& y) {
        if (x.t > y.t) return false;
        for (size_t i = 0; i < x.exp.size(); ++i)
            if (x.exp[i] > y.exp[i]) return false;
        return true;
    };
    auto key = [](const Generator& g) {
        RVec v = g.exp;
        v.push_back(g.t);
        return v;
    };
    std::sort(gens.begin(), gens.end(), [&](const Generator& x, const Generator& y) { return key(x) < key(y); });
    gens.erase(std::unique(gens.begin(), gens.end(),
                           [&](const Generator& x, const Generator& y) { return key(x) == key(y); }),
               gens.end());
    std::vector<Generator> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < gens.size() && !dominated; ++j)
            if (j != i && le(gens[j], gens[i])) dominated = true;
        if (!dominated) out.push_back(gens[i]);
    }
    return out;
}

std::vector<Generator> power_oracle(const MonomialFlagIdeal& a, int m, std::size_t cap) {
    if (m < 1) throw InputError("power must be at least 1");
    if (!orthant(a)) throw InputError("power oracle works on orthant charts only");
    for (auto& g : a.gens)
        for (auto& x : g.exp)
            if (!is_integral(x)) throw InputError("power oracle needs integral exponents");
    auto base = minimal_generators(a.gens);
    const size_t g = base.size();
    // number of multisets of size m from g generators
    Rational count = binom(static_cast<int>(g) + m - 1, m);
    if (count > Rational(static_cast<long>(cap))) throw ResourceError("power oracle exceeds the generator cap");
    std::vector<Generator> sums;
    std::vector<size_t> idx(m, 0);
    for (;;) {
        Generator s{RVec(a.k, Rational(0)), 0};
        for (size_t i : idx) {
            s.exp = s.exp + base[i].exp;
            s.t += base[i].t;
        }
        sums.push_back(std::move(s));
        int p = m - 1;
        while (p >= 0 && idx[p] == g - 1) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < m; ++q) idx[q] = idx[p];
    }
    return minimal_generators(std::move(sums));
}

bool same_monomial_ideal(const std::vector<Generator>& a, const std::vector<Generator>& b) {
    auto divides = [](const Generator& x, const Generator& y) {
        if (x.t > y.t) return false;
        for (size_t i = 0; i < x.exp.size(); ++i)
            if (x.exp[i] > y.exp[i]) return false;
        return true;
    };
    auto covered = [&](const std::vector<Generator>& from, const std::vector<Generator>& by) {
        for (auto& x : from) {
            bool ok = false;
            for (auto& y : by)
                if (divides(y, x)) {
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

bool star_power_check(const LocalChain& chain, int k, int m, std::size_t cap) {
    auto lhs = power_oracle(chain_ideal(chain, k), m, cap);
    auto level = [&](long j) { return j < chain.r ? chain.levels[j] : RVec(k, Rational(0)); };
    std::vector<Generator> rhs;
    for (long kk = 0; kk <= m * chain.r; ++kk) {
        long j = kk / m, i = kk - m * j;
        rhs.push_back({Rational(m - i) * level(j) + Rational(i) * level(j + 1), kk});
    }
    return same_monomial_ideal(lhs, minimal_generators(rhs));
}

LocalChain chain_from_generators(const MonomialFlagIdeal& a) {
    validate(a);
    long r = -1;
    for (auto& g : a.gens)
        if (is_zero(g.exp) && (r < 0 || g.t < r)) r = g.t;
    LocalChain c;
    c.r = r;
    c.levels.assign(r, RVec());
    std::vector<bool> seen(r, false);
    for (auto& g : a.gens) {
        if (g.t >= r) continue;
        if (seen[g.t]) throw InputError("more than one generator at t-order " + std::to_string(g.t));
        seen[g.t] = true;
        c.levels[g.t] = g.exp;
    }
    for (long j = 0; j < r; ++j)
        if (!seen[j]) throw InputError("missing generator at t-order " + std::to_string(j));
    return c;
}

}  // namespace jstab
