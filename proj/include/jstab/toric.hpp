#pragma once

#include "jstab/energy.hpp"

#include <vector>

namespace jstab {

// #{u ∈ Z² : <u, v_i> ≥ −a_i for all rays v_i}
long polygon_lattice_count(const ToricData& toric, const std::vector<long>& a);
std::vector<long> toric_lift(const IntersectionModel& model, const DivisorClass& D);

struct OracleResult {
    std::vector<Integer> colengths;  // m = 1 .. m_max
    Integer fitted_e = 0;
    bool polynomial = false;  // all (n+1)-th differences agree
};

OracleResult lattice_count_oracle(const IntersectionModel& model, const DivisorClass& L, const FlagChain& chain,
                                  int m_max);
OracleResult lattice_count_oracle_serial(const IntersectionModel& model, const DivisorClass& L,
                                         const FlagChain& chain, int m_max);

}  // namespace jstab
