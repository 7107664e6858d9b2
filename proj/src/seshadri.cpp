#include "kva/seshadri.hpp"

#include "kva/pell.hpp"

namespace kva {

const char* provenance_name(SeshadriProvenance p) {
    switch (p) {
        case SeshadriProvenance::pell_rho1: return "pell-rho1";
        case SeshadriProvenance::kuchle: return "kuchle";
        case SeshadriProvenance::bauer_szemberg: return "bauer-szemberg";
        case SeshadriProvenance::szemberg_floor: return "szemberg-floor";
    }
    return "?";
}

SeshadriBound bound_pell_rho1(const Int& d, const Int& r) {
    if (d < 1 || r < 1) throw std::domain_error("bound_pell_rho1: need d >= 1 and r >= 1");
    SeshadriBound b;
    b.provenance = SeshadriProvenance::pell_rho1;
    b.assumptions = {"picard-rank-1", "points-general"};
    /* 2d / sqrt(1 + 2rd) = sqrt(4d^2 / (1 + 2rd)) */
    b.relaxed = Surd::sqrt_of_rational(make_rational(4 * d * d, 1 + 2 * r * d));

    Surd exact = Surd::sqrt_of_rational(make_rational(2 * d, r));
    if (exact.is_rational()) {
        b.value = exact;  // sqrt(2d/r) rational: the constant is attained
        return b;
    }
    PellSolution sol = pell_primitive(2 * r * d);
    b.value = Surd(make_rational(2 * d * sol.k0, sol.l0));
    return b;
}

SeshadriBound bound_kuchle(const Int& L2, const Int& r, const Surd& eps1) {
    if (L2 < 1) throw std::domain_error("bound_kuchle: need L^2 >= 1");
    if (r < 2) throw std::domain_error("bound_kuchle: needs r >= 2");
    SeshadriBound b;
    b.provenance = SeshadriProvenance::kuchle;
    b.assumptions = {"points-general"};
    Surd half_sqrt = Surd::sqrt_of_rational(make_rational(L2, 4));
    Surd spread = Surd::sqrt_of_rational(make_rational(L2 * (r - 1), r * r));
    b.value = surd_min(eps1, surd_min(half_sqrt, spread));
    return b;
}

SeshadriBound bound_bauer_szemberg(const Int& d, const std::optional<Int>& eps0) {
    if (d < 1) throw std::domain_error("bound_bauer_szemberg: need d >= 1");
    if (eps0 && *eps0 < 1) throw std::domain_error("bound_bauer_szemberg: eps0 >= 1 required");
    SeshadriBound b;
    b.provenance = SeshadriProvenance::bauer_szemberg;
    b.assumptions = {"points-general"};
    Surd seven = Surd::sqrt_of_rational(make_rational(7 * d, 4));  // (sqrt 7 / 2) sqrt d
    if (!eps0) {
        b.assumptions.push_back("no-elliptic-curves");
        b.value = seven;
        return b;
    }
    b.assumptions.push_back("min-elliptic-degree-asserted");
    b.value = surd_min(Surd(make_rational(*eps0)), seven);
    return b;
}

SeshadriBound bound_szemberg_floor(const Int& L2, const Int& r) {
    if (L2 < 1 || r < 1) throw std::domain_error("bound_szemberg_floor: need L^2 >= 1 and r >= 1");
    SeshadriBound b;
    b.provenance = SeshadriProvenance::szemberg_floor;
    b.assumptions = {"picard-rank-1", "points-general"};
    b.value = Surd(make_rational(floor_sqrt_rational(make_rational(L2, r))));
    return b;
}

Surd seshadri_upper_bound(const Int& L2, const Int& r) {
    return Surd::sqrt_of_rational(make_rational(L2, r));
}

}  // namespace kva
