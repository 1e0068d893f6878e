#include "jstab/toric.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace jstab {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// colength of m·L against the level ideals at power m
Integer colength_at(const ToricData& toric, const std::vector<long>& L, const std::vector<std::vector<long>>& D,
                    long m) {
    const size_t nr = toric.rays.size();
    const long r = static_cast<long>(D.size());
    auto scaled = [&](long s) {
        std::vector<long> v(nr);
        for (size_t i = 0; i < nr; ++i) v[i] = s * L[i];
        return v;
    };
    const long base = polygon_lattice_count(toric, scaled(m));
    std::vector<long> zero(nr, 0);
    Integer total = 0;
    for (long k = 0; k < m * r; ++k) {
        long j = k / m, i = k - m * j;
        const auto& Dj = D[j];
        const auto& Dj1 = j + 1 < r ? D[j + 1] : zero;
        std::vector<long> a = scaled(m);
        for (size_t q = 0; q < nr; ++q) a[q] -= (m - i) * Dj[q] + i * Dj1[q];
        total += base - polygon_lattice_count(toric, a);
    }
    return total;
}

struct Prepared {
    const ToricData* toric;
    std::vector<long> L;
    std::vector<std::vector<long>> D;
};

Prepared prepare(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain, int m_max) {
    if (!model.toric) throw InputError("model " + model.name + " carries no toric structure");
    if (model.n != 2) throw InputError("lattice oracle supports toric surfaces only");
    if (m_max < model.n + 3) throw InputError("m_max too small to confirm the fit");
    Prepared p{&*model.toric, toric_lift(model, L), {}};
    for (auto& d : chain.levels) p.D.push_back(toric_lift(model, d));
    return p;
}

OracleResult fit(std::vector<Integer> seq, int n) {
    OracleResult out;
    out.colengths = seq;
    // (n+1)-th forward differences
    for (int d = 0; d < n + 1; ++d) {
        std::vector<Integer> next;
        for (size_t i = 0; i + 1 < seq.size(); ++i) next.push_back(seq[i + 1] - seq[i]);
        seq = std::move(next);
    }
    out.fitted_e = seq.front();
    out.polynomial = std::all_of(seq.begin(), seq.end(), [&](const Integer& x) { return x == seq.front(); });
    return out;
}

}  // namespace

long polygon_lattice_count(const ToricData& toric, const std::vector<long>& a) {
    const auto& R = toric.rays;
    const size_t nr = R.size();
    if (a.size() != nr) throw InputError("toric divisor has wrong length");
    auto inside = [&](const Rational& x, const Rational& y) {
        for (size_t i = 0; i < nr; ++i)
            if (R[i][0] * x + R[i][1] * y < -a[i]) return false;
        return true;
    };
    std::optional<Rational> lo, hi;
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = i + 1; j < nr; ++j) {
            long det = R[i][0] * R[j][1] - R[i][1] * R[j][0];
            if (det == 0) continue;
            // <u, v_i> = −a_i, <u, v_j> = −a_j
            Rational x = Rational(-a[i] * R[j][1] + a[j] * R[i][1], det);
            Rational y = Rational(-R[i][0] * a[j] + R[j][0] * a[i], det);
            if (!inside(x, y)) continue;
            if (!lo || x < *lo) lo = x;
            if (!hi || x > *hi) hi = x;
        }
    if (!lo) return 0;
    long x0 = ceil_div(num(*lo).convert_to<long>(), den(*lo).convert_to<long>());
    long x1 = floor_div(num(*hi).convert_to<long>(), den(*hi).convert_to<long>());
    long count = 0;
    for (long x = x0; x <= x1; ++x) {
        long ylo = std::numeric_limits<long>::min(), yhi = std::numeric_limits<long>::max();
        bool ok = true;
        for (size_t i = 0; i < nr && ok; ++i) {
            long vx = R[i][0], vy = R[i][1];
            long rhs = -a[i] - vx * x;
            if (vy > 0)
                ylo = std::max(ylo, ceil_div(rhs, vy));
            else if (vy < 0)
                yhi = std::min(yhi, floor_div(rhs, vy));
            else if (rhs > 0)
                ok = false;
        }
        if (ok && yhi >= ylo) count += yhi - ylo + 1;
    }
    return count;
}

std::vector<long> toric_lift(const IntersectionModel& model, const DivisorClass& D) {
    if (!model.toric) throw InputError("model " + model.name + " carries no toric structure");
    const auto& lift = model.toric->basis_lift;
    std::vector<long> out(model.toric->rays.size(), 0);
    for (int b = 0; b < model.rho; ++b) {
        if (!is_integral(D[b])) throw InputError("toric lift needs integral coefficients");
        long c = num(D[b]).convert_to<long>();
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * lift[b][i];
    }
    return out;
}

OracleResult lattice_count_oracle(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain,
                                  int m_max) {
    Prepared p = prepare(model, L, chain, m_max);
    std::vector<Integer> seq(m_max);
#pragma omp parallel for schedule(dynamic)
    for (int m = 1; m <= m_max; ++m) seq[m - 1] = colength_at(*p.toric, p.L, p.D, m);
    return fit(std::move(seq), model.n);
}

OracleResult lattice_count_oracle_serial(const IntersectionModel& model, const DivisorClass& L,
                                         const FlagChain& chain, int m_max) {
    Prepared p = prepare(model, L, chain, m_max);
    std::vector<Integer> seq;
    for (int m = 1; m <= m_max; ++m) seq.push_back(colength_at(*p.toric, p.L, p.D, m));
    return fit(std::move(seq), model.n);
}

}  // namespace jstab
