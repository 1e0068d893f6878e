#pragma once

#include "jstab/reproduce.hpp"

#include <random>

namespace testing_support {

using namespace jstab;

inline std::vector<IntersectionModel> surface_models() {
    return {projective_plane(), hirzebruch(0), hirzebruch(1), hirzebruch(2), hirzebruch(3), blown_up_plane()};
}

inline Rational rand_rat(std::mt19937& g, int lo, int hi, int maxden = 6) {
    std::uniform_int_distribution<int> d(1, maxden);
    int q = d(g);
    std::uniform_int_distribution<int> p(lo * q, hi * q);
    return Rational(p(g), q);
}

inline DivisorClass rand_class(const IntersectionModel& m, std::mt19937& g, int lo = -3, int hi = 3) {
    DivisorClass d = m.zero();
    for (int i = 0; i < m.rho; ++i) d[i] = rand_rat(g, lo, hi);
    return d;
}

inline DivisorClass rand_eff(const IntersectionModel& m, std::mt19937& g, int hi = 2) {
    DivisorClass d = m.zero();
    for (auto& e : m.eff_generators) d = d + rand_rat(g, 0, hi) * e;
    return d;
}

inline DivisorClass rand_ample(const IntersectionModel& m, std::mt19937& g) {
    for (;;) {
        DivisorClass d = rand_rat(g, 1, 3) * m.reference_ample + rand_class(m, g, -1, 1);
        if (is_ample(m, d).holds) return d;
    }
}

// steps D_k − D_{k+1} effective and non-increasing in k, so the chain is its own closure;
// optionally L − D_0 nef
inline FlagChain rand_chain(const IntersectionModel& m, const DivisorClass& L, std::mt19937& g, int r,
                            bool require_nef = true) {
    for (;;) {
        std::vector<DivisorClass> rev;
        DivisorClass acc = m.zero(), step = m.zero();
        for (int k = 0; k < r; ++k) {
            step = step + rand_eff(m, g, 1);
            acc = acc + step;
            rev.push_back(acc);
        }
        FlagChain c{{rev.rbegin(), rev.rend()}};
        ChainCheck ck = check_chain(m, L, c);
        for (int s = 0; require_nef && ck.valid && !ck.nef_ok && s < 6; ++s) {
            for (auto& d : c.levels) d = Rational(1, 2) * d;
            ck = check_chain(m, L, c);
        }
        if (ck.valid && !ck.almost_trivial && (!require_nef || ck.nef_ok)) return c;
    }
}

}  // namespace testing_support
