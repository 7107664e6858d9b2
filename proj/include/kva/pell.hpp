#ifndef KVA_PELL_HPP
#define KVA_PELL_HPP

/*
 * Fundamental solution of the Pell equation l^2 - D k^2 = 1 via the continued
 * fraction of sqrt(D): with period length p, the solution is the convergent
 * at index p-1 for even p and 2p-1 for odd p.  The result is verified against
 * the equation before it is returned.
 */

#include "kva/cfrac.hpp"
#include "kva/exactmath.hpp"

namespace kva {

struct PellSolution {
    Int l0;  // minimal l >= 2 with l^2 - D k^2 = 1
    Int k0;  // the matching k >= 1
    Int D;
};

/* Throws std::domain_error for D < 2 or square D (degenerate equation). */
PellSolution pell_primitive(const Int& D);

/* Lower bound l0^2 >= 1 + 2 r d for the D = 2 r d equation, as an exact
 * rational.  Throws std::domain_error unless r >= 1 and d >= 1. */
Rational pell_lower_bound_l0(const Int& r, const Int& d);

}  // namespace kva

#endif
