#pragma once

#include "jstab/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jstab {

struct DivisorClass {
    RVec coeffs;

    DivisorClass() = default;
    explicit DivisorClass(RVec c) : coeffs(std::move(c)) {}
    DivisorClass(std::initializer_list<Rational> c) : coeffs(c) {}

    size_t size() const { return coeffs.size(); }
    const Rational& operator[](size_t i) const { return coeffs[i]; }
    Rational& operator[](size_t i) { return coeffs[i]; }
    bool operator==(const DivisorClass& o) const { return coeffs == o.coeffs; }
    bool zero() const { return is_zero(coeffs); }
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(const Rational& s, const DivisorClass& a);

struct Curve {
    std::string label;
    DivisorClass cls;
};

// torus-invariant presentation of a toric surface
struct ToricData {
    std::vector<std::array<long, 2>> rays;
    std::vector<std::vector<long>> basis_lift;  // basis element -> coefficients on rays
};

struct IntersectionModel {
    std::string name;
    int n = 0;
    int rho = 0;
    std::vector<std::string> basis_labels;
    std::map<std::vector<int>, Rational> form;  // keyed by sorted index multisets
    std::vector<RVec> nef_functionals;
    std::vector<DivisorClass> eff_generators;
    DivisorClass reference_ample;
    std::vector<Curve> curves;  // aligned with nef_functionals when present
    bool cycles_complete = false;
    std::optional<ToricData> toric;

    RVec tensor;  // dense symmetric expansion, rho^n entries

    int label_index(const std::string& label) const;
    DivisorClass zero() const { return DivisorClass(RVec(rho, Rational(0))); }
    DivisorClass basis(int i) const;
};

struct FormEntry {
    std::vector<int> indices;
    Rational value;
};

// validates and closes the form symmetrically; throws InputError on conflicts
IntersectionModel make_model(std::string name, int n, std::vector<std::string> labels,
                             const std::vector<FormEntry>& entries, std::vector<RVec> nef,
                             std::vector<DivisorClass> eff, DivisorClass reference_ample);

Rational intersect(const IntersectionModel& model, const std::vector<DivisorClass>& classes);
// L^a · M^b · ... as a list of (class, power)
Rational intersect_powers(const IntersectionModel& model,
                          const std::vector<std::pair<DivisorClass, int>>& factors);
Rational volume(const IntersectionModel& model, const DivisorClass& L);
Rational evaluate(const RVec& functional, const DivisorClass& D);

struct ConeVerdict {
    bool holds = false;
    int witness = -1;  // violating functional
    RVec values;       // κ_i(D)
};

ConeVerdict is_nef(const IntersectionModel& model, const DivisorClass& D);
ConeVerdict is_ample(const IntersectionModel& model, const DivisorClass& D);
bool is_pseffective(const IntersectionModel& model, const DivisorClass& D);
bool is_big(const IntersectionModel& model, const DivisorClass& D);
// sup{δ : D − δ·L pseudoeffective}
Rational pseff_threshold(const IntersectionModel& model, const DivisorClass& D, const DivisorClass& L);

IntersectionModel projective_plane();
IntersectionModel hirzebruch(int e);
IntersectionModel blown_up_plane();
IntersectionModel builtin(const std::string& name, int param = 0);

using GlobalClass = std::vector<DivisorClass>;  // one restriction per component

struct DeminormalModel {
    std::vector<IntersectionModel> components;
    std::map<std::string, GlobalClass> global_classes;

    int n() const { return components.empty() ? 0 : components.front().n; }
    const GlobalClass& at(const std::string& label) const;
    void define(const std::string& label, GlobalClass cls);
};

DeminormalModel make_deminormal(std::vector<IntersectionModel> components);
Rational intersect(const DeminormalModel& dm, const std::vector<GlobalClass>& classes);
Rational volume(const DeminormalModel& dm, const GlobalClass& L);

struct AverageCheck {
    bool same = false;
    RVec ratios;
    Rational global_ratio;
    int witness = -1;  // component with minimal ratio
    Rational coefficient;
};

AverageCheck check_same_average(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H);

}  // namespace jstab
