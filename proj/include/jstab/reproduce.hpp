#pragma once

#include "jstab/report_json.hpp"

#include <string>
#include <vector>

namespace jstab {

struct HirzebruchData {
    IntersectionModel model;
    DivisorClass L, H;
};

// L = mC_0 + nf on F_e with the H that puts (X, L) on the stability boundary
HirzebruchData hirzebruch_family(int e, int m, int n, const Rational& a);

struct GluedExample {
    DeminormalModel dm;
    GlobalClass L, H, C, M1, M2;
};

GluedExample glued_blowups(const Rational& eta, const Rational& delta, const Rational& eps);

std::vector<std::string> scenario_names();
// runs a preset; "pass" is true iff every value matches its stored expectation
json run_scenario(const std::string& name);

}  // namespace jstab
