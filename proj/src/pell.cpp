#include "kva/pell.hpp"

namespace kva {

PellSolution pell_primitive(const Int& D) {
    if (D < 2) throw std::domain_error("pell_primitive: D must be >= 2");
    ContinuedFractionSqrt cf = cfrac_sqrt(D);  // rejects squares
    const std::size_t p = cf.period.size();
    const std::size_t count = (p % 2 == 0) ? p - 1 : 2 * p - 1;
    auto [l, k] = cfrac_convergent(cf, count);
    if (l * l - D * k * k != 1)
        throw std::logic_error("pell_primitive: convergent failed verification");
    return {l, k, D};
}

Rational pell_lower_bound_l0(const Int& r, const Int& d) {
    if (r < 1 || d < 1) throw std::domain_error("pell_lower_bound_l0: need r >= 1 and d >= 1");
    return make_rational(1 + 2 * r * d);
}

}  // namespace kva
