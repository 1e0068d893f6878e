#pragma once

#include "jstab/lattice_core.hpp"

#include <variant>
#include <vector>

namespace jstab {

struct FlagChain {
    std::vector<DivisorClass> levels;  // D_0 .. D_{r-1}, D_r = 0
    Integer l = 1;
};

struct ChainCheck {
    bool valid = true;      // all differences pseudoeffective
    int bad_link = -1;
    bool almost_trivial = false;
    bool nef_ok = true;     // L − D_k nef for all k
    int nef_level = -1;
};

ChainCheck check_chain(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain);

struct EnergyReport {
    Rational jh, j, i_minus_j, i, e;
    struct Link {
        Rational e_flag;  // Σ_j e_L(D_k, D_{k+1}, j) / l
        Rational jh;      // this link's share of jh
    };
    std::vector<Link> per_link;
    bool almost_trivial = false;
    bool advisory_nef_failed = false;
};

Rational mixed_multiplicity(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& A,
                            const DivisorClass& B, int j);
Rational restricted_mixed_multiplicity(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                       const DivisorClass& A, const DivisorClass& B, int j);
Rational e_flag(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain);
Rational jh_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                   const FlagChain& chain);

struct SurfaceEnergy {
    Rational value;
    RVec terms;  // T(D_i, D_{i+1})
};

SurfaceEnergy surface_chain_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                   const FlagChain& chain);

EnergyReport energy_report(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                           const FlagChain& chain);
EnergyReport norms(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain);

struct SlopeEnergy {
    Rational value;
    RVec coefficients;  // coefficient of c^p at index p, already divided by V(L)
};

SlopeEnergy slope_energy(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                         const DivisorClass& D, const Rational& c);

// V is a divisor class, so p = n − 1
Rational slope_leading_term(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                            const DivisorClass& V, int p, const Rational& mult);
// user pairings: hl = H·L^{p−1}·V, lp = L^p·V
Rational slope_leading_term(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                            const Rational& hl, const Rational& lp, int p, const Rational& mult);

// 2(C·L)(L·H) − (C·H)L² − (L·H)C²
Rational surface_inequality_lhs(const IntersectionModel& model, const DivisorClass& L, const DivisorClass& H,
                                const DivisorClass& C);
Rational surface_inequality_lhs(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H,
                                const GlobalClass& C);

// chain of the m-th power under the star condition: levels (m−i)D_j + iD_{j+1}
FlagChain expand_chain(const FlagChain& chain, int m);

using DeminormalResult = std::variant<EnergyReport, AverageCheck>;

DeminormalResult deminormal_energy(const DeminormalModel& dm, const GlobalClass& L, const GlobalClass& H,
                                   const std::vector<FlagChain>& chains);

}  // namespace jstab
