#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kva/certify.hpp"

using namespace kva;

namespace {

const TraceStep* find_step(const Certificate& c, const std::string& anchor) {
    for (const auto& s : c.trace)
        if (s.anchor == anchor) return &s;
    return nullptr;
}

const TraceStep* find_desc(const Certificate& c, const std::string& needle) {
    for (const auto& s : c.trace)
        if (s.description.find(needle) != std::string::npos) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("decompose: floor/ceil splits") {
    Decomposition d = decompose(3, 7);
    CHECK(d.floor_q == 2);
    CHECK(d.ceil_q == 3);
    CHECK(d.rem == 1);

    d = decompose(1, 5);
    CHECK(d.floor_q == 5);
    CHECK(d.ceil_q == 5);
    CHECK(d.rem == 0);

    d = decompose(4, 2);
    CHECK(d.floor_q == 0);
    CHECK(d.ceil_q == 1);
    CHECK(d.rem == 2);

    CHECK_THROWS_AS(decompose(0, 3), std::domain_error);
    CHECK_THROWS_AS(decompose(2, -1), std::domain_error);
}

TEST_CASE("combine_htt: tensor order additivity") {
    CHECK(combine_htt({{2, 0}}) == 0);
    CHECK(combine_htt({{2, 1}, {1, 2}}) == 4);
    for (Int k = 0; k <= 9; ++k) CHECK(combine_htt({{1, k}}) == k);
    CHECK_THROWS_AS(combine_htt({{-1, 2}}), std::domain_error);
}

TEST_CASE("plan_components: identity, branch selection, combined order") {
    /* rem(alpha) >= rem(k): the remainder copies carry the rounded-up order */
    DecompositionRecord rec = plan_components(3, 7, 4);
    CHECK(rec.branch == "rem-split");
    CHECK(rec.combined >= 4);

    /* rem(alpha) < rem(k): alpha floor exceeds k floor, every copy steps up */
    rec = plan_components(3, 7, 5);
    CHECK(rec.branch == "floor-gap");
    CHECK(rec.combined >= 5);

    CHECK_THROWS_AS(plan_components(2, 1, 3), std::domain_error);

    std::mt19937_64 rng(90210);
    std::uniform_int_distribution<long> cc(1, 50), aa(0, 999);
    for (int i = 0; i < 400; ++i) {
        Int c = cc(rng), alpha = aa(rng);
        std::uniform_int_distribution<long> kk(0, static_cast<long>(alpha.get_si()));
        Int k = kk(rng);
        DecompositionRecord p = plan_components(c, alpha, k);
        Int mults = 0, weighted = 0;
        for (const auto& comp : p.components) {
            mults += comp.mult;
            weighted += comp.mult * comp.alpha_eff;
            CHECK(comp.alpha_eff >= comp.order);  // component stays certifiable
        }
        CHECK(mults == c);
        CHECK(weighted == alpha);
        CHECK(p.combined >= k);
    }
}

TEST_CASE("rank-one gate: certified window boundary at d = 13") {
    SurfaceSpec s = SurfaceSpec::abelian_rho1(13);

    /* window (2*13 - 9) / 4 = 17/4, so r = 4 passes and r = 5 does not */
    Certificate in = certify(s, BundleQuery(1, 1, 1, 4));
    CHECK(in.verdict == Verdict::certified);
    CHECK(in.gate == "rho1-kva");
    CHECK(certificate_recheck(in));
    const TraceStep* w = find_step(in, "point-window");
    REQUIRE(w != nullptr);
    CHECK(w->rhs == Surd(make_rational(17, 4)));

    Certificate out = certify(s, BundleQuery(1, 1, 1, 5));
    CHECK(out.verdict == Verdict::not_certified);
    CHECK_FALSE(out.reason.empty());
    CHECK(certificate_recheck(out));  // failed steps re-store the true relation

    /* global generation variant widens the window to 21/4 */
    Certificate gg = certify(s, BundleQuery(1, 1, 0, 5));
    CHECK(gg.verdict == Verdict::certified);
    CHECK(gg.gate == "rho1-gg");
}

TEST_CASE("necessity: alpha < k is refuted with the exceptional-degree step") {
    Certificate c = certify(SurfaceSpec::abelian_rho1(100), BundleQuery(1, 0, 1, 1));
    CHECK(c.verdict == Verdict::refuted);
    CHECK(c.gate == "necessity");
    const TraceStep* deg = find_step(c, "exceptional-restriction");
    REQUIRE(deg != nullptr);
    CHECK(deg->relation == "=");
    CHECK(deg->rhs == Surd(make_rational(0)));
    CHECK(certificate_recheck(c));
}

TEST_CASE("k-trivial gate: window, floor and margin at L^2 = 36") {
    SurfaceSpec s = SurfaceSpec::ktrivial_rho1(36);

    Certificate in = certify(s, BundleQuery(1, 1, 1, 4));
    CHECK(in.verdict == Verdict::certified);
    CHECK(in.gate == "ktrivial");
    const TraceStep* w = find_desc(in, "inside the certified window");
    REQUIRE(w != nullptr);
    CHECK(w->rhs == Surd(make_rational(4)));  // 36 / (1+2)^2

    CHECK(certify(s, BundleQuery(1, 1, 1, 5)).verdict == Verdict::not_certified);
    /* r = 1 sits outside the criterion's hypotheses */
    Certificate one = certify(s, BundleQuery(1, 1, 1, 1));
    CHECK(one.verdict == Verdict::not_certified);
    CHECK(certificate_recheck(one));
}

TEST_CASE("elliptic-assertion gate: threshold on the asserted minimal degree") {
    BundleQuery q(1, 1, 1, 2);

    SurfaceSpec s = SurfaceSpec::abelian(10);
    s.min_elliptic_degree = 4;  // threshold for k = 1 is ceil(alpha/c) + 2 = 3
    Certificate in = certify(s, q);
    CHECK(in.verdict == Verdict::certified);
    CHECK(in.gate == "any-picard-va");
    CHECK(certificate_recheck(in));

    s.min_elliptic_degree = 2;
    CHECK(certify(s, q).verdict == Verdict::not_certified);
    Certificate out = gate_any_picard(s, q);  // the gate keeps the failing step
    CHECK(out.verdict == Verdict::not_certified);
    const TraceStep* t = find_step(out, "elliptic-degree");
    REQUIRE(t != nullptr);
    CHECK(t->relation == "<");  // 1 < 3, recorded as it actually holds

    SurfaceSpec big = SurfaceSpec::abelian(50);
    big.min_elliptic_degree = 5;
    Certificate kva = certify(big, BundleQuery(1, 2, 1, 4));
    CHECK(kva.verdict == Verdict::certified);

    /* k = 2 widens the divisor to T = A + K + 1 = 5, so the window needs
     * 2d/25 - 2 > r; no elliptic curves clears any threshold */
    SurfaceSpec none = SurfaceSpec::abelian(100);
    none.no_elliptic_curves = true;
    Certificate kva2 = certify(none, BundleQuery(1, 2, 2, 4));
    CHECK(kva2.verdict == Verdict::certified);
    CHECK(kva2.gate == "any-picard-kva");
}

TEST_CASE("corollaries: very-general degree bound and asserted Seshadri bound") {
    BundleQuery q(1, 1, 0, 2);

    SurfaceSpec vg = SurfaceSpec::abelian(26);
    vg.very_general = true;
    Certificate c = certify(vg, q);  // 16*26 = 416 > 81*4 = 324
    CHECK(c.verdict == Verdict::certified);
    CHECK(c.gate == "corollary-very-general");
    CHECK(certificate_recheck(c));

    /* asserted eps(L;1) = 5/2 misses (5 - sqrt 5)/2 * 2 = 5 - sqrt 5 */
    SurfaceSpec eps = SurfaceSpec::abelian(26);
    eps.eps1 = Surd(make_rational(5, 2));
    CHECK(certify(eps, q).verdict == Verdict::not_certified);
    Certificate miss = gate_corollaries(eps, q);
    CHECK(miss.verdict == Verdict::not_certified);
    CHECK(certificate_recheck(miss));
    const TraceStep* t = find_step(miss, "seshadri-elliptic-bound");
    REQUIRE(t != nullptr);
    CHECK_FALSE(t->relation == ">");

    /* a healthy assertion certifies through the same core */
    eps.eps1 = Surd(make_rational(4));
    Certificate hit = certify(eps, q);
    CHECK(hit.verdict == Verdict::certified);
    CHECK(hit.gate == "corollary-seshadri");

    /* the corollaries stop at k = 1 */
    SurfaceSpec vg2 = SurfaceSpec::abelian(1000);
    vg2.very_general = true;
    Certificate high = gate_corollaries(vg2, BundleQuery(1, 3, 2, 2));
    CHECK(high.verdict == Verdict::not_certified);
    CHECK(high.reason == "the corollaries cover k <= 1 only");
}

TEST_CASE("dispatcher: fixed gate order and aggregated reasons") {
    /* rank-one gate wins even when the elliptic-assertion gate also applies */
    SurfaceSpec s = SurfaceSpec::abelian_rho1(13);
    s.min_elliptic_degree = 100;
    Certificate c = certify(s, BundleQuery(1, 1, 1, 4));
    CHECK(c.gate == "rho1-kva");

    /* nothing applies: plain abelian surface without assertions */
    Certificate none = certify(SurfaceSpec::abelian(26), BundleQuery(1, 1, 1, 2));
    CHECK(none.verdict == Verdict::not_certified);
    CHECK(none.gate == "dispatcher");
    CHECK(none.gate_reasons.empty());

    /* everything applicable declines: reasons are aggregated per gate */
    SurfaceSpec both = SurfaceSpec::abelian_rho1(3);
    both.min_elliptic_degree = 1;
    Certificate agg = certify(both, BundleQuery(1, 1, 1, 5));
    CHECK(agg.verdict == Verdict::not_certified);
    CHECK(agg.gate_reasons.size() == 2);
    CHECK(agg.gate_reasons[0].first == "rho1-kva");
    CHECK(certificate_recheck(agg));
}

TEST_CASE("gates reject foreign surface kinds") {
    CHECK_THROWS_AS(gate_rho1_kva(SurfaceSpec::abelian(13), BundleQuery(1, 1, 1, 4)),
                    hypothesis_error);
    CHECK_THROWS_AS(gate_ktrivial(SurfaceSpec::abelian_rho1(13), BundleQuery(1, 1, 1, 4)),
                    hypothesis_error);
    CHECK_THROWS_AS(gate_any_picard(SurfaceSpec::abelian(13), BundleQuery(1, 1, 1, 4)),
                    hypothesis_error);
    CHECK_THROWS_AS(gate_corollaries(SurfaceSpec::abelian(13), BundleQuery(1, 1, 1, 4)),
                    hypothesis_error);
    SurfaceSpec bad = SurfaceSpec::abelian(0);
    CHECK_THROWS_AS(certify(bad, BundleQuery(1, 1, 1, 4)), std::domain_error);
}

TEST_CASE("rank-one gate: certified region is downward closed in r") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> dd(2, 80), aa(0, 4);
    for (int i = 0; i < 150; ++i) {
        Int d = dd(rng), alpha = aa(rng);
        std::uniform_int_distribution<long> kk(0, static_cast<long>(alpha.get_si()));
        Int k = kk(rng);
        SurfaceSpec s = SurfaceSpec::abelian_rho1(d);
        bool above_certified = false;
        for (Int r = 60; r >= 1; --r) {
            Certificate c = certify(s, BundleQuery(1, alpha, k, r));
            CHECK(certificate_recheck(c));
            if (above_certified) CHECK(c.verdict == Verdict::certified);
            if (c.verdict == Verdict::certified) above_certified = true;
        }
    }
}

TEST_CASE("tensor decompositions surface in the certificate for c > 1") {
    SurfaceSpec s = SurfaceSpec::abelian_rho1(40);
    Certificate c = certify(s, BundleQuery(3, 4, 2, 3));
    CHECK(c.verdict == Verdict::certified);
    REQUIRE(c.decomposition.has_value());
    CHECK(c.decomposition->combined >= 2);
    CHECK(find_step(c, "htt-tensor") != nullptr);
    CHECK(find_step(c, "tensor-case-split") != nullptr);
    CHECK(certificate_recheck(c));
}
