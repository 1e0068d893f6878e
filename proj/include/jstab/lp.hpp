#pragma once

#include "jstab/rational.hpp"

#include <vector>

namespace jstab {

enum class Sense { LE, EQ, GE };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinearProgram {
    int num_vars = 0;
    std::vector<bool> is_free;  // default: all variables nonnegative
    struct Row {
        RVec a;
        Sense sense;
        Rational b;
    };
    std::vector<Row> rows;
    RVec objective;  // maximized; empty means pure feasibility

    explicit LinearProgram(int vars = 0) : num_vars(vars), is_free(vars, false) {}
    void add(RVec a, Sense s, Rational b) { rows.push_back({std::move(a), s, std::move(b)}); }
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value = 0;
    RVec x;
};

// two-phase dense simplex over exact rationals, Bland's rule
LPResult solve(const LinearProgram& lp);
bool feasible(const LinearProgram& lp);

}  // namespace jstab
