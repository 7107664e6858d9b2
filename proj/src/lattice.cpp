#include "kva/lattice.hpp"

namespace kva {

Int self_intersection(const IntersectionContext& ctx, const DivisorClass& D) {
    Int s = ctx.polarization_square * D.a * D.a;
    for (const Int& mi : D.m) s -= mi * mi;
    return s;
}

Int pair_product(const IntersectionContext& ctx, const DivisorClass& D1, const DivisorClass& D2) {
    if (D1.m.size() != D2.m.size())
        throw std::invalid_argument("pair_product: classes live on different blow-ups");
    Int s = ctx.polarization_square * D1.a * D2.a;
    for (std::size_t i = 0; i < D1.m.size(); ++i) s -= D1.m[i] * D2.m[i];
    return s;
}

BundleQuery::BundleQuery(Int c_, Int alpha_, Int k_, Int r_)
    : c(std::move(c_)), alpha(std::move(alpha_)), k(std::move(k_)), r(std::move(r_)) {
    if (c < 1) throw std::domain_error("BundleQuery: c >= 1 required");
    if (alpha < 0) throw std::domain_error("BundleQuery: alpha >= 0 required");
    if (k < 0) throw std::domain_error("BundleQuery: k >= 0 required");
    if (r < 1) throw std::domain_error("BundleQuery: r >= 1 required");
}

namespace {
std::size_t checked_count(const Int& r) {
    if (r > 1000000) throw std::domain_error("blow-up point count too large to materialize");
    return static_cast<std::size_t>(r.get_ui());
}
}  // namespace

DivisorClass bundle_class(const BundleQuery& q) {
    return {q.c, std::vector<Int>(checked_count(q.r), q.alpha)};
}

DivisorClass adjoint_twist(const BundleQuery& q) {
    return {q.c, std::vector<Int>(checked_count(q.r), q.alpha + 1)};
}

NumericProfile::NumericProfile(Int ell_, Int delta_, std::vector<Int> m_)
    : ell(std::move(ell_)), delta(std::move(delta_)), m(std::move(m_)) {
    if (ell < 1) throw std::domain_error("NumericProfile: ell >= 1 required");
    if (delta < 0 || delta % 2 != 0)
        throw std::domain_error("NumericProfile: delta must be even and >= 0");
    for (const Int& mi : m)
        if (mi < 0) throw std::domain_error("NumericProfile: multiplicities must be >= 0");
}

Int NumericProfile::beta() const {
    Int b = 0;
    for (const Int& mi : m)
        if (mi != 0) ++b;
    return b;
}

Int NumericProfile::sum_m() const {
    Int s = 0;
    for (const Int& mi : m) s += mi;
    return s;
}

Int NumericProfile::sum_m_sq() const {
    Int s = 0;
    for (const Int& mi : m) s += mi * mi;
    return s;
}

ProfileCheck profile_feasible(const NumericProfile& p, const Int& d,
                              const Int& max_excluded_degree) {
    if (p.ell * p.ell < 2 * d * p.delta) return {false, "R2-hodge"};
    if (p.delta % 2 != 0) return {false, "R3-parity"};
    if (p.delta == 0 && p.ell <= max_excluded_degree) return {false, "R4-elliptic-excluded"};
    return {true, ""};
}

}  // namespace kva
