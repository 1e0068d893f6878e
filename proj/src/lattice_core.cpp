#include "jstab/lattice_core.hpp"

#include "jstab/lp.hpp"

#include <algorithm>

namespace jstab {

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return DivisorClass(a.coeffs + b.coeffs); }
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return DivisorClass(a.coeffs - b.coeffs); }
DivisorClass operator-(const DivisorClass& a) { return DivisorClass(-a.coeffs); }
DivisorClass operator*(const Rational& s, const DivisorClass& a) { return DivisorClass(s * a.coeffs); }

int IntersectionModel::label_index(const std::string& label) const {
    for (size_t i = 0; i < basis_labels.size(); ++i)
        if (basis_labels[i] == label) return static_cast<int>(i);
    throw InputError("unknown basis label '" + label + "' in model " + name);
}

DivisorClass IntersectionModel::basis(int i) const {
    DivisorClass d = zero();
    d[i] = 1;
    return d;
}

namespace {

int matrix_rank(std::vector<RVec> rows) {
    int rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int p = -1;
        for (size_t i = rank; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                p = static_cast<int>(i);
                break;
            }
        if (p < 0) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank || rows[i][c] == 0) continue;
            Rational f = rows[i][c] / rows[rank][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

void check_class(const IntersectionModel& m, const DivisorClass& D) {
    if (static_cast<int>(D.size()) != m.rho)
        throw InputError("class has " + std::to_string(D.size()) + " coefficients, model rank is " +
                         std::to_string(m.rho));
}

}  // namespace

IntersectionModel make_model(std::string name, int n, std::vector<std::string> labels,
                             const std::vector<FormEntry>& entries, std::vector<RVec> nef,
                             std::vector<DivisorClass> eff, DivisorClass reference_ample) {
    IntersectionModel m;
    m.name = std::move(name);
    m.n = n;
    m.rho = static_cast<int>(labels.size());
    m.basis_labels = std::move(labels);
    if (n < 1) throw InputError("dimension must be positive");
    if (m.rho < 1) throw InputError("lattice rank must be positive");
    for (const auto& e : entries) {
        if (static_cast<int>(e.indices.size()) != n)
            throw InputError("form entry has " + std::to_string(e.indices.size()) + " indices, expected " +
                             std::to_string(n));
        for (int i : e.indices)
            if (i < 0 || i >= m.rho) throw InputError("form index out of range");
        auto key = e.indices;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = m.form.emplace(key, e.value);
        if (!fresh && it->second != e.value) throw InputError("conflicting values for a symmetric form entry");
    }
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= m.rho;
    m.tensor.assign(total, Rational(0));
    std::vector<int> idx(n, 0);
    for (size_t flat = 0; flat < total; ++flat) {
        size_t r = flat;
        for (int k = n - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(r % m.rho);
            r /= m.rho;
        }
        auto key = idx;
        std::sort(key.begin(), key.end());
        auto it = m.form.find(key);
        if (it != m.form.end()) m.tensor[flat] = it->second;
    }
    for (auto& k : nef)
        if (static_cast<int>(k.size()) != m.rho) throw InputError("nef functional has wrong length");
    m.nef_functionals = std::move(nef);
    for (auto& g : eff) check_class(m, g);
    m.eff_generators = std::move(eff);
    check_class(m, reference_ample);
    m.reference_ample = std::move(reference_ample);
    for (size_t i = 0; i < m.nef_functionals.size(); ++i)
        if (evaluate(m.nef_functionals[i], m.reference_ample) <= 0)
            throw InputError("reference ample class fails nef functional " + std::to_string(i));
    if (!is_pseffective(m, m.reference_ample))
        throw InputError("reference ample class is outside the effective cone");
    return m;
}

Rational intersect(const IntersectionModel& model, const std::vector<DivisorClass>& classes) {
    if (static_cast<int>(classes.size()) != model.n)
        throw InputError("intersect needs " + std::to_string(model.n) + " classes, got " +
                         std::to_string(classes.size()));
    for (auto& c : classes) check_class(model, c);
    // contract the last index repeatedly
    RVec cur = model.tensor;
    for (int k = model.n - 1; k >= 0; --k) {
        RVec next(cur.size() / model.rho, Rational(0));
        const RVec& c = classes[k].coeffs;
        for (size_t i = 0; i < next.size(); ++i)
            for (int j = 0; j < model.rho; ++j)
                if (c[j] != 0) next[i] += cur[i * model.rho + j] * c[j];
        cur = std::move(next);
    }
    return cur[0];
}

Rational intersect_powers(const IntersectionModel& model,
                          const std::vector<std::pair<DivisorClass, int>>& factors) {
    std::vector<DivisorClass> cls;
    for (auto& [d, p] : factors)
        for (int i = 0; i < p; ++i) cls.push_back(d);
    return intersect(model, cls);
}

Rational volume(const IntersectionModel& model, const DivisorClass& L) {
    return intersect_powers(model, {{L, model.n}});
}

Rational evaluate(const RVec& functional, const DivisorClass& D) { return dot(functional, D.coeffs); }

ConeVerdict is_nef(const IntersectionModel& model, const DivisorClass& D) {
    check_class(model, D);
    ConeVerdict v;
    v.holds = true;
    for (size_t i = 0; i < model.nef_functionals.size(); ++i) {
        v.values.push_back(evaluate(model.nef_functionals[i], D));
        if (v.values.back() < 0 && v.holds) {
            v.holds = false;
            v.witness = static_cast<int>(i);
        }
    }
    return v;
}

ConeVerdict is_ample(const IntersectionModel& model, const DivisorClass& D) {
    ConeVerdict v = is_nef(model, D);
    if (!v.holds) return v;
    for (size_t i = 0; i < v.values.size(); ++i)
        if (v.values[i] <= 0) {
            v.holds = false;
            v.witness = static_cast<int>(i);
            return v;
        }
    // an empty functional list cannot certify ampleness
    v.holds = !v.values.empty();
    return v;
}

bool is_pseffective(const IntersectionModel& model, const DivisorClass& D) {
    check_class(model, D);
    const int g = static_cast<int>(model.eff_generators.size());
    LinearProgram lp(g);
    for (int r = 0; r < model.rho; ++r) {
        RVec row(g);
        for (int j = 0; j < g; ++j) row[j] = model.eff_generators[j][r];
        lp.add(row, Sense::EQ, D[r]);
    }
    return feasible(lp);
}

bool is_big(const IntersectionModel& model, const DivisorClass& D) {
    check_class(model, D);
    if (model.n == 2)
        return intersect(model, {D, D}) > 0 && intersect(model, {D, model.reference_ample}) > 0;
    std::vector<RVec> gens;
    for (auto& gcls : model.eff_generators) gens.push_back(gcls.coeffs);
    if (matrix_rank(gens) < model.rho) return false;
    // maximize s with D = sum mu_j g_j, mu_j >= s, s <= 1
    const int g = static_cast<int>(gens.size());
    LinearProgram lp(g + 1);
    lp.is_free[g] = true;
    for (int r = 0; r < model.rho; ++r) {
        RVec row(g + 1, Rational(0));
        for (int j = 0; j < g; ++j) row[j] = gens[j][r];
        lp.add(row, Sense::EQ, D[r]);
    }
    for (int j = 0; j < g; ++j) {
        RVec row(g + 1, Rational(0));
        row[j] = 1;
        row[g] = -1;
        lp.add(row, Sense::GE, 0);
    }
    RVec cap(g + 1, Rational(0));
    cap[g] = 1;
    lp.add(cap, Sense::LE, 1);
    lp.objective = cap;
    auto res = solve(lp);
    return res.status == LPStatus::Optimal && res.value > 0;
}

Rational pseff_threshold(const IntersectionModel& model, const DivisorClass& D, const DivisorClass& L) {
    check_class(model, D);
    check_class(model, L);
    const int g = static_cast<int>(model.eff_generators.size());
    LinearProgram lp(g + 1);
    lp.is_free[g] = true;
    for (int r = 0; r < model.rho; ++r) {
        RVec row(g + 1, Rational(0));
        for (int j = 0; j < g; ++j) row[j] = model.eff_generators[j][r];
        row[g] = L[r];
        lp.add(row, Sense::EQ, D[r]);
    }
    lp.objective.assign(g + 1, Rational(0));
    lp.objective[g] = 1;
    auto res = solve(lp);
    if (res.status == LPStatus::Infeasible) throw HypothesisError("no δ makes D − δL pseudoeffective");
    if (res.status == LPStatus::Unbounded) throw HypothesisError("−L is pseudoeffective; threshold unbounded");
    return res.value;
}

IntersectionModel projective_plane() {
    auto m = make_model("projective_plane", 2, {"h"}, {{{0, 0}, 1}}, {{1}}, {DivisorClass{1}}, DivisorClass{1});
    m.curves = {{"line", DivisorClass{1}}};
    m.cycles_complete = true;
    m.toric = ToricData{{{1, 0}, {0, 1}, {-1, -1}}, {{1, 0, 0}}};
    return m;
}

IntersectionModel hirzebruch(int e) {
    if (e < 0) throw InputError("hirzebruch parameter e must be a nonnegative integer");
    // basis (C_0, f); functionals are pairing with C_0 and with f
    auto m = make_model("hirzebruch(" + std::to_string(e) + ")", 2, {"C_0", "f"},
                        {{{0, 0}, -e}, {{0, 1}, 1}, {{1, 1}, 0}}, {{-e, 1}, {1, 0}},
                        {DivisorClass{1, 0}, DivisorClass{0, 1}}, DivisorClass{1, e + 1});
    m.curves = {{"C_0", DivisorClass{1, 0}}, {"f", DivisorClass{0, 1}}};
    m.cycles_complete = true;
    // rays (1,0)->f, (0,1)->C_0, (-1,e)->f, (0,-1)->C_0+ef
    m.toric = ToricData{{{1, 0}, {0, 1}, {-1, e}, {0, -1}}, {{0, 1, 0, 0}, {1, 0, 0, 0}}};
    return m;
}

IntersectionModel blown_up_plane() {
    // basis (h, ex); functionals are pairing with ex and with h - ex
    auto m = make_model("blown_up_plane", 2, {"h", "ex"}, {{{0, 0}, 1}, {{1, 1}, -1}}, {{0, -1}, {1, 1}},
                        {DivisorClass{1, -1}, DivisorClass{0, 1}}, DivisorClass{2, -1});
    m.curves = {{"ex", DivisorClass{0, 1}}, {"h-ex", DivisorClass{1, -1}}};
    m.cycles_complete = true;
    return m;
}

IntersectionModel builtin(const std::string& name, int param) {
    if (name == "projective_plane") return projective_plane();
    if (name == "hirzebruch") return hirzebruch(param);
    if (name == "blown_up_plane") return blown_up_plane();
    throw InputError("unknown builtin model '" + name + "'");
}

const GlobalClass& DeminormalModel::at(const std::string& label) const {
    auto it = global_classes.find(label);
    if (it == global_classes.end()) throw InputError("unknown global class '" + label + "'");
    return it->second;
}

void DeminormalModel::define(const std::string& label, GlobalClass cls) {
    if (cls.size() != components.size())
        throw InputError("global class '" + label + "' lacks a restriction on some component");
    for (size_t i = 0; i < cls.size(); ++i) check_class(components[i], cls[i]);
    global_classes[label] = std::move(cls);
}

DeminormalModel make_deminormal(std::vector<IntersectionModel> components) {
    if (components.empty()) throw InputError("deminormal model needs at least one component");
    for (auto& c : components)
        if (c.n != components.front().n) throw InputError("components differ in dimension");
    DeminormalModel dm;
    dm.components = std::move(components);
    return dm;
}

Rational intersect(const DeminormalModel& dm, const std::vector<GlobalClass>& classes) {
    Rational s = 0;
    for (size_t i = 0; i < dm.components.size(); ++i) {
        std::vector<DivisorClass> restricted;
        for (auto& g : classes) {
            if (g.size() != dm.components.size()) throw InputError("global class has wrong component count");
            restricted.push_back(g[i]);
        }
        s += intersect(dm.components[i], restricted);
    }
    return s;
}

Rational volume(const DeminormalModel& dm, const GlobalClass& L) {
    return intersect(dm, std::vector<GlobalClass>(dm.n(), L));
}

AverageCheck check_same_average(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H) {
    const int n = dm.n();
    AverageCheck out;
    Rational hl_sum = 0, vol_sum = 0;
    RVec hl, vol;
    for (size_t i = 0; i < dm.components.size(); ++i) {
        const auto& m = dm.components[i];
        if (!is_ample(m, L[i]).holds) throw HypothesisError("L is not ample on component " + std::to_string(i));
        Rational v = volume(m, L[i]);
        if (v <= 0) throw HypothesisError("L has nonpositive volume on component " + std::to_string(i));
        Rational h = intersect_powers(m, {{H[i], 1}, {L[i], n - 1}});
        hl.push_back(h);
        vol.push_back(v);
        out.ratios.push_back(h / v);
        hl_sum += h;
        vol_sum += v;
    }
    out.global_ratio = hl_sum / vol_sum;
    out.same = std::all_of(out.ratios.begin(), out.ratios.end(), [&](const Rational& r) { return r == out.global_ratio; });
    if (!out.same) {
        auto it = std::min_element(out.ratios.begin(), out.ratios.end());
        out.witness = static_cast<int>(it - out.ratios.begin());
        out.coefficient = Rational(n) / vol_sum * (hl[out.witness] - out.global_ratio * vol[out.witness]);
    }
    return out;
}

}  // namespace jstab
