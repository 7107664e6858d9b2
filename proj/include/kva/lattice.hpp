#ifndef KVA_LATTICE_HPP
#define KVA_LATTICE_HPP

/*
 * Integer intersection arithmetic on the Neron-Severi lattice of the blow-up
 * of a polarized surface at r points.  Classes are written in the basis
 * (pullback of L; exceptional curves E_1..E_r) as a*L - sum(m_i E_i), so the
 * lattice is <L^2> + r * <-1> and every product is exact integer arithmetic.
 *
 * Two surface models share the code: a (1,d)-polarized abelian surface with
 * L^2 = 2d, and a K-trivial surface of Picard rank one with L^2 = l.
 */

#include <vector>

#include "kva/exactmath.hpp"

namespace kva {

enum class SurfaceModel { abelian, ktrivial };

/* Self-intersection of the polarization: 2d for abelian, l for K-trivial. */
struct IntersectionContext {
    SurfaceModel model;
    Int polarization_square;

    static IntersectionContext abelian(const Int& d) {
        if (d < 1) throw std::domain_error("abelian model needs d >= 1");
        return {SurfaceModel::abelian, 2 * d};
    }
    static IntersectionContext ktrivial(const Int& l) {
        if (l < 1) throw std::domain_error("ktrivial model needs L^2 >= 1");
        return {SurfaceModel::ktrivial, l};
    }
};

/* a * pull-back of L minus sum m_i E_i; m_i may be negative (so the class of
 * E_j itself is a = 0, m_j = -1). */
struct DivisorClass {
    Int a;
    std::vector<Int> m;
};

Int self_intersection(const IntersectionContext& ctx, const DivisorClass& D);
Int pair_product(const IntersectionContext& ctx, const DivisorClass& D1, const DivisorClass& D2);

/* Bundle under certification: M = c * pi^* L - alpha * sum E_i on the blow-up
 * at r points, asked to be k-very ample. */
struct BundleQuery {
    Int c;      // >= 1
    Int alpha;  // >= 0
    Int k;      // >= 0
    Int r;      // >= 1

    BundleQuery(Int c_, Int alpha_, Int k_, Int r_);
};

DivisorClass bundle_class(const BundleQuery& q);

/* Adjoint-twist class N = c * pi^* L - (alpha+1) * sum E_i used by the Reider
 * and k-very-ampleness windows (on both models K_blowup pairs the same way). */
DivisorClass adjoint_twist(const BundleQuery& q);

/*
 * Numeric profile of a candidate obstruction divisor D = pi^* D_S - sum m_i E_i:
 * keeps only ell = L.D_S, delta = D_S^2 and the multiplicities, exactly the
 * data the case eliminations consume.  delta must be even and >= 0 (effective
 * divisors on an abelian surface), ell >= 1, multiplicities >= 0.
 */
struct NumericProfile {
    Int ell;
    Int delta;
    std::vector<Int> m;

    NumericProfile(Int ell_, Int delta_, std::vector<Int> m_);

    Int beta() const;  // number of nonzero multiplicities
    Int sum_m() const;
    Int sum_m_sq() const;
};

struct ProfileCheck {
    bool feasible;
    const char* rule;  // violated rule when infeasible, "" otherwise
};

/* Checks, in order: Hodge index ell^2 >= 2 d delta, parity of delta, and the
 * elliptic exclusion (delta = 0 forces ell > max_excluded_degree).  The last
 * parameter is the largest excluded elliptic degree, i.e. the hypothesis
 * "no elliptic curve of degree <= max_excluded_degree". */
ProfileCheck profile_feasible(const NumericProfile& p, const Int& d, const Int& max_excluded_degree);

}  // namespace kva

#endif
