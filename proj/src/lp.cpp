#include "jstab/lp.hpp"

namespace jstab {

namespace {

struct Tableau {
    int m = 0, cols = 0;
    std::vector<RVec> t;  // m rows, cols + 1 entries (last = rhs)
    std::vector<int> basis;

    void pivot(int r, int c) {
        Rational p = t[r][c];
        for (auto& v : t[r]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (int j = 0; j <= cols; ++j)
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // maximize cost over columns with usable[j]; returns false if unbounded
    bool optimize(const RVec& cost, const std::vector<bool>& usable) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (!usable[j]) continue;
                Rational z = -cost[j];
                for (int i = 0; i < m; ++i)
                    if (t[i][j] != 0) z += cost[basis[i]] * t[i][j];
                if (z < 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    Rational value(const RVec& cost) const {
        Rational v = 0;
        for (int i = 0; i < m; ++i) v += cost[basis[i]] * t[i][cols];
        return v;
    }
};

}  // namespace

LPResult solve(const LinearProgram& lp) {
    const int nv = lp.num_vars;
    // structural columns: one per variable, plus a negative part for free ones
    std::vector<int> neg_col(nv, -1);
    int cols = nv;
    for (int v = 0; v < nv; ++v)
        if (v < static_cast<int>(lp.is_free.size()) && lp.is_free[v]) neg_col[v] = cols++;
    std::vector<int> slack_col(lp.rows.size(), -1);
    for (size_t i = 0; i < lp.rows.size(); ++i)
        if (lp.rows[i].sense != Sense::EQ) slack_col[i] = cols++;
    const int structural = cols;
    const int m = static_cast<int>(lp.rows.size());
    cols += m;  // artificials

    Tableau tab;
    tab.m = m;
    tab.cols = cols;
    tab.t.assign(m, RVec(cols + 1, Rational(0)));
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        if (static_cast<int>(row.a.size()) != nv) throw InputError("LP row has wrong length");
        RVec& r = tab.t[i];
        for (int v = 0; v < nv; ++v) {
            r[v] = row.a[v];
            if (neg_col[v] >= 0) r[neg_col[v]] = -row.a[v];
        }
        if (slack_col[i] >= 0) r[slack_col[i]] = row.sense == Sense::LE ? 1 : -1;
        r[cols] = row.b;
        if (r[cols] < 0)
            for (auto& x : r) x = -x;
        r[structural + i] = 1;
        tab.basis[i] = structural + i;
    }

    LPResult res;
    RVec phase1(cols, Rational(0));
    for (int i = 0; i < m; ++i) phase1[structural + i] = -1;
    std::vector<bool> all(cols, true);
    tab.optimize(phase1, all);
    if (tab.value(phase1) != 0) {
        res.status = LPStatus::Infeasible;
        return res;
    }
    // drive artificials out of the basis, dropping redundant rows
    for (int i = 0; i < tab.m;) {
        if (tab.basis[i] < structural) {
            ++i;
            continue;
        }
        int c = -1;
        for (int j = 0; j < structural && c < 0; ++j)
            if (tab.t[i][j] != 0) c = j;
        if (c >= 0) {
            tab.pivot(i, c);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.m;
        }
    }

    RVec cost(cols, Rational(0));
    for (int v = 0; v < nv && v < static_cast<int>(lp.objective.size()); ++v) {
        cost[v] = lp.objective[v];
        if (neg_col[v] >= 0) cost[neg_col[v]] = -lp.objective[v];
    }
    std::vector<bool> usable(cols, false);
    for (int j = 0; j < structural; ++j) usable[j] = true;
    if (!tab.optimize(cost, usable)) {
        res.status = LPStatus::Unbounded;
        return res;
    }
    RVec y(cols, Rational(0));
    for (int i = 0; i < tab.m; ++i) y[tab.basis[i]] = tab.t[i][cols];
    res.x.assign(nv, Rational(0));
    for (int v = 0; v < nv; ++v) res.x[v] = y[v] - (neg_col[v] >= 0 ? y[neg_col[v]] : Rational(0));
    res.value = tab.value(cost);
    res.status = LPStatus::Optimal;
    return res;
}

bool feasible(const LinearProgram& lp) {
    LinearProgram q = lp;
    q.objective.clear();
    return solve(q).status != LPStatus::Infeasible;
}

}  // namespace jstab
