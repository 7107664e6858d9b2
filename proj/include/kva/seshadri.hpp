#ifndef KVA_SESHADRI_HPP
#define KVA_SESHADRI_HPP

/*
 * Certified lower bounds for multi-point Seshadri constants eps(L; r) at r
 * general points, kept exact as quadratic surds.
 *
 *  - Picard-rank-one abelian surface: the Pell bound 2 d k0 / l0 from the
 *    fundamental solution of l^2 - 2 r d k^2 = 1 (exact value sqrt(2d/r)
 *    when that is rational), together with the relaxed closed form
 *    2d / sqrt(1 + 2 r d) the certification gates consume.
 *  - Any abelian surface: one-point bound min{eps0, sqrt(7 d)/2} and the
 *    r-point reduction min{eps(L;1), sqrt(L^2)/2, sqrt(L^2 (r-1))/r}.
 *  - K-trivial Picard-rank-one: the floor bound floor(sqrt(L^2 / r)).
 *
 * Every returned value lies below the universal ceiling sqrt(L^2 / r).
 */

#include <optional>
#include <string>
#include <vector>

#include "kva/exactmath.hpp"

namespace kva {

enum class SeshadriProvenance { pell_rho1, kuchle, bauer_szemberg, szemberg_floor };

const char* provenance_name(SeshadriProvenance p);

struct SeshadriBound {
    Surd value;
    SeshadriProvenance provenance;
    std::vector<std::string> assumptions;
    /* weaker closed-form bound implied by value, where the gates use one */
    std::optional<Surd> relaxed;
};

/* Pell bound for eps(L; r), L of type (1, d), Picard rank one.  d, r >= 1. */
SeshadriBound bound_pell_rho1(const Int& d, const Int& r);

/* r-point reduction from a one-point bound eps1, L^2 >= 1, r >= 2. */
SeshadriBound bound_kuchle(const Int& L2, const Int& r, const Surd& eps1);

/* One-point bound on a (1, d)-polarized abelian surface; eps0 is the minimal
 * elliptic-curve degree, nullopt when no elliptic curves exist. */
SeshadriBound bound_bauer_szemberg(const Int& d, const std::optional<Int>& eps0);

/* floor(sqrt(L^2 / r)) on a K-trivial Picard-rank-one surface, r >= 1. */
SeshadriBound bound_szemberg_floor(const Int& L2, const Int& r);

/* The ceiling sqrt(L^2 / r) every lower bound must respect. */
Surd seshadri_upper_bound(const Int& L2, const Int& r);

}  // namespace kva

#endif
