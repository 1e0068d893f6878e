#pragma once

#include "jstab/energy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jstab {

enum class Verdict { Unstable, Semistable, StableNotUniform, UniformlyStable, SufficientOnly, Inconclusive };

std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Inconclusive;
    std::string criterion;  // for SufficientOnly
    int witness = -1;       // functional index
    std::string witness_label;
    std::optional<Rational> epsilon;
    DivisorClass b2;
    RVec b2_values;  // κ_i(B2)
    RVec l_values;   // κ_i(L)
    bool h_pseffective = false, h_big = false, h_ample = false;
};

DivisorClass surface_b2(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H);
Classification classify_surface(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H);

struct ThresholdReport {
    Rational delta_pp, ample_infimum, pseff_threshold;
    bool applicable = false;
    bool h_pseffective = false;
    bool same_average = true;  // irreducible models
    bool not_uniform = false;
    bool below_threshold = false;  // delta_pp < pseff_threshold
};

ThresholdReport threshold(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H);

struct FuResult {
    Verdict verdict = Verdict::Inconclusive;
    std::string criterion;  // "uniform" or "semistable"
    Rational epsilon = 0, delta_star = 0;
    DivisorClass test_class;
    RVec test_values;
    Rational h_dot = 0;  // H·L^{n−1}
};

FuResult check_fu(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H);

struct ComparabilityResult {
    Rational delta;
    FuResult plus, minus;  // check_fu on H + δL and −H + δL
};

ComparabilityResult comparability_bound(const IntersectionModel& model, const DivisorClass& L,
                                        const DivisorClass& H);

struct Cycle {
    std::string label;
    int p = 1;
    std::optional<DivisorClass> divisor;  // p = n − 1
    bool whole = false;                   // p = n
    // pairings supplied by the user otherwise
    Rational hl = 0, lp = 0;  // H·L^{p−1}·V, L^p·V
    RVec k_pairings;          // K^i·L^{p−i}·V for i = 0..p
    int j = 0;                // asserted numerical dimension of K on V
};

std::vector<Cycle> builtin_cycles(const IntersectionModel& model);

struct SwRow {
    std::string label;
    int p = 0;
    Rational value;
    bool skipped = false;  // p = n, covered by the nef test
};

struct SwResult {
    Verdict verdict = Verdict::Inconclusive;
    Rational epsilon = 0;
    int witness = -1;
    bool relative = true;  // verdict only relative to the supplied cycles
    std::vector<SwRow> rows;
};

SwResult check_sw(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                  const std::vector<Cycle>& cycles, bool complete = false);

struct MinimalModelRow {
    std::string label;
    int p = 0, j = 0;
    RVec coefficients;  // binom(p,i)(m−i)K^i·L^{p−i}·V
    RVec pairings;      // K^i·L^{p−i}·V
    bool ok = true;
    int witness = -1;
};

struct MinimalModelResult {
    bool pass = true;
    int m = 0;
    std::vector<MinimalModelRow> rows;
};

MinimalModelResult check_minimal_model(const IntersectionModel& model, const DivisorClass& K, const DivisorClass& L,
                                       int m, const std::vector<Cycle>& cycles);

struct ProportionalResult {
    bool ratios_equal = false;
    RVec ll_over_hh, lh_over_hh;
    bool components_stable = false;
    bool certified = false;
    std::vector<std::pair<Rational, bool>> grid;  // t, uniformly stable
};

ProportionalResult check_proportional_components(const DeminormalModel& dm, const GlobalClass& L,
                                                 const GlobalClass& H, const std::vector<Rational>& t_grid);

struct ScanRow {
    std::vector<Rational> coords;
    DivisorClass L;
    bool ample = false;
    Classification cls;
    std::optional<Rational> delta_pp;
    std::string error;
};

// L_t = (1−t)M + tH
std::vector<ScanRow> scan_segment(const IntersectionModel& model, const DivisorClass& M, const DivisorClass& H,
                                  const std::vector<Rational>& ts);
std::vector<ScanRow> scan_segment_serial(const IntersectionModel& model, const DivisorClass& M,
                                         const DivisorClass& H, const std::vector<Rational>& ts);
// L = x·e_0 + y·e_1 on rank-2 models
std::vector<ScanRow> scan_plane(const IntersectionModel& model, const DivisorClass& H, const std::vector<Rational>& xs,
                                const std::vector<Rational>& ys);
std::vector<ScanRow> scan_plane_serial(const IntersectionModel& model, const DivisorClass& H,
                                       const std::vector<Rational>& xs, const std::vector<Rational>& ys);

struct UjsReport {
    bool boundary_found = false;
    DivisorClass M;
    std::vector<ScanRow> rows;
    std::optional<Rational> uniform_lo, uniform_hi;
    bool contiguous = false;
    bool matches_half_interval = false;  // uniform exactly for t > 1/2, t = 1/2 stable
};

std::optional<DivisorClass> boundary_class(const IntersectionModel& model, const DivisorClass& H);
UjsReport ujs_section(const IntersectionModel& model, const DivisorClass& H, const std::vector<Rational>& t_grid,
                      std::optional<DivisorClass> M = std::nullopt);

}  // namespace jstab
