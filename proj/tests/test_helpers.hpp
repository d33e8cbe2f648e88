#pragma once

#include <random>

#include "rinf/exact_linear.hpp"
#include "rinf/modular_group.hpp"

namespace rinf::testing {

/// Random element of SL(2,Z) as a short product of T = (1 1; 0 1) and
/// T' = (1 0; 1 1) powers.
inline Mat2 random_sl2(std::mt19937_64& rng, int steps = 6, int max_exp = 3) {
    static const Mat2 T = gen_T();
    static const Mat2 Tp{1, 0, 1, 1};
    std::uniform_int_distribution<int> exp(-max_exp, max_exp);
    Mat2 m = Mat2::identity();
    for (int i = 0; i < steps; ++i)
        m = m * mat_pow(i % 2 ? T : Tp, exp(rng));
    return m;
}

/// Random element of GL(2,Z) (either determinant).
inline Mat2 random_gl2(std::mt19937_64& rng, int steps = 6, int max_exp = 3) {
    Mat2 m = random_sl2(rng, steps, max_exp);
    if (rng() & 1) m = m * Mat2{1, 0, 0, -1};
    return m;
}

/// Random Anosov matrix with all |entries| <= bound (rejection sampled).
inline Mat2 random_anosov(std::mt19937_64& rng, long bound,
                          bool allow_det_minus_one = false) {
    for (;;) {
        Mat2 m = allow_det_minus_one ? random_gl2(rng) : random_sl2(rng);
        if (!is_anosov(m)) continue;
        const Int b(bound);
        if (abs(m.a) > b || abs(m.b) > b || abs(m.c) > b || abs(m.d) > b)
            continue;
        return m;
    }
}

}  // namespace rinf::testing
