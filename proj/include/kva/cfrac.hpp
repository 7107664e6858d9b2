#ifndef KVA_CFRAC_HPP
#define KVA_CFRAC_HPP

/*
 * Periodic continued fraction of sqrt(m) for non-square m >= 2, computed with
 * the integer (P, Q) recurrence
 *     a_i = floor((a0 + P_i) / Q_i),
 *     P_{i+1} = a_i Q_i - P_i,
 *     Q_{i+1} = (m - P_{i+1}^2) / Q_i,
 * which stays in exact integers throughout (Q_i always divides m - P_i^2).
 * The period is detected by recurrence of the first interior (P, Q) state.
 */

#include <vector>

#include "kva/exactmath.hpp"

namespace kva {

struct ContinuedFractionSqrt {
    Int a0;                   // floor(sqrt(m))
    std::vector<Int> period;  // the periodic block a_1 ... a_p
};

/* Throws std::domain_error for m < 2 or perfect-square m. */
ContinuedFractionSqrt cfrac_sqrt(const Int& m);

/* Convergent h/k of [a0; terms...] after consuming `count` terms of the
 * periodic block (cycling as needed); count = 0 gives a0/1. */
std::pair<Int, Int> cfrac_convergent(const ContinuedFractionSqrt& cf, std::size_t count);

}  // namespace kva

#endif
