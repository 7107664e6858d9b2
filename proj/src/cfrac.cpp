#include "kva/cfrac.hpp"

namespace kva {

ContinuedFractionSqrt cfrac_sqrt(const Int& m) {
    if (m < 2) throw std::domain_error("cfrac_sqrt: radicand must be >= 2");
    auto [a0, square] = isqrt(m);
    if (square) throw std::domain_error("cfrac_sqrt: radicand is a perfect square");

    ContinuedFractionSqrt cf;
    cf.a0 = a0;

    /* state after the integer part: P_1 = a0, Q_1 = m - a0^2 */
    Int P = a0, Q = m - a0 * a0;
    const Int P1 = P, Q1 = Q;
    for (;;) {
        Int a = (a0 + P) / Q;
        cf.period.push_back(a);
        P = a * Q - P;
        Q = (m - P * P) / Q;
        if (P == P1 && Q == Q1) break;
    }
    return cf;
}

std::pair<Int, Int> cfrac_convergent(const ContinuedFractionSqrt& cf, std::size_t count) {
    /* h_i = a_i h_{i-1} + h_{i-2}, seeded h_{-1} = 1, h_{-2} = 0 (same for k) */
    Int h_prev = 1, h_prev2 = 0;
    Int k_prev = 0, k_prev2 = 1;
    Int h = cf.a0 * h_prev + h_prev2;
    Int k = cf.a0 * k_prev + k_prev2;
    h_prev2 = h_prev;
    k_prev2 = k_prev;
    h_prev = h;
    k_prev = k;
    const std::size_t p = cf.period.size();
    for (std::size_t i = 0; i < count; ++i) {
        const Int& a = cf.period[i % p];
        h = a * h_prev + h_prev2;
        k = a * k_prev + k_prev2;
        h_prev2 = h_prev;
        k_prev2 = k_prev;
        h_prev = h;
        k_prev = k;
    }
    return {h, k};
}

}  // namespace kva
