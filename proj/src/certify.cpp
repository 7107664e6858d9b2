#include "kva/certify.hpp"

#include <functional>

#include "kva/seshadri.hpp"

namespace kva {

namespace {

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Surd si(const Int& n) { return Surd(make_rational(n)); }
Surd sq(const Rational& q) { return Surd(q); }

/* Linear step recorder: `require` asserts `lhs rel rhs`, and on failure writes
 * the relation that actually holds plus a reason, switching the certificate to
 * NotCertified and muting later steps.  `note` records facts the gate already
 * guarantees; a failure there is a bug, not an input condition. */
struct StepEval {
    Certificate& cert;
    bool ok = true;

    bool require(std::string desc, const Surd& lhs, const char* rel, const Surd& rhs,
                 std::string anchor, std::string fail_reason) {
        if (!ok) return false;
        TraceStep s{std::move(desc), lhs, rel, rhs, std::move(anchor)};
        if (step_holds(s)) {
            cert.trace.push_back(std::move(s));
            return true;
        }
        auto c = surd_compare(lhs, rhs);
        s.relation = c < 0 ? "<" : (c > 0 ? ">" : "=");
        cert.trace.push_back(std::move(s));
        cert.verdict = Verdict::not_certified;
        cert.reason = std::move(fail_reason);
        ok = false;
        return false;
    }

    void note(std::string desc, const Surd& lhs, const char* rel, const Surd& rhs,
              std::string anchor) {
        if (!ok) return;
        TraceStep s{std::move(desc), lhs, rel, rhs, std::move(anchor)};
        if (!step_holds(s)) throw std::logic_error("certify: recorded step does not hold");
        cert.trace.push_back(std::move(s));
    }
};

DivisorClass first_exceptional(const Int& r) {
    BundleQuery probe(1, 0, 0, r);
    DivisorClass e = bundle_class(probe);  // a = 1, m = (0,...,0)
    e.a = 0;
    e.m[0] = -1;
    return e;
}

/* Records M.E_1 = alpha and decides refutation: a k-very-ample bundle meets
 * every curve in at least k points, and an exceptional curve soaks up exactly
 * alpha.  Returns true when the query is refuted. */
bool necessity_steps(Certificate& cert, const IntersectionContext& ctx, const BundleQuery& q) {
    Int deg = pair_product(ctx, bundle_class(q), first_exceptional(q.r));
    cert.trace.push_back({"restriction degree of the bundle to an exceptional curve",
                          si(deg), "=", si(q.alpha), "exceptional-restriction"});
    if (q.alpha < q.k) {
        cert.trace.push_back({"degree on the exceptional curve falls short of the order",
                              si(q.alpha), "<", si(q.k), "k-va-necessity"});
        cert.verdict = Verdict::refuted;
        cert.reason = "an exceptional curve meets the bundle in alpha < k points";
        return true;
    }
    cert.trace.push_back({"necessary degree condition on exceptional curves",
                          si(q.alpha), ">=", si(q.k), "k-va-necessity"});
    return false;
}

void decomposition_steps(StepEval& ev, Certificate& cert, const BundleQuery& q) {
    DecompositionRecord plan = plan_components(q.c, q.alpha, q.k);
    if (q.c > 1) {
        const auto& as = plan.alpha_split;
        const auto& ks = plan.k_split;
        Int rebuilt = (q.c - as.rem) * as.floor_q + as.rem * as.ceil_q;
        ev.note("floor/ceil split of alpha across the c pullback copies", si(rebuilt), "=",
                si(q.alpha), "decomposition");
        if (plan.branch == "rem-split")
            ev.note("alpha remainder covers the k remainder", si(as.rem), ">=", si(ks.rem),
                    "tensor-case-split");
        else
            ev.note("alpha floor strictly exceeds the k floor", si(as.floor_q), ">=",
                    si(ks.floor_q + 1), "tensor-case-split");
        ev.note("tensor product of the planned components reaches order k", si(plan.combined),
                ">=", si(q.k), "htt-tensor");
    }
    cert.decomposition = std::move(plan);
}

/* Shared window-and-components core of the elliptic-assertion gates (also
 * reached from the corollaries once they discharge the elliptic hypothesis).
 * `excluded_through` is the largest elliptic degree known impossible. */
void any_picard_core(StepEval& ev, Certificate& cert, const SurfaceSpec& s, const BundleQuery& q,
                     const Int& excluded_through) {
    Int A = ceil_div(q.alpha, q.c), K = ceil_div(q.k, q.c);
    Int T = q.k <= 1 ? Int(A + 1) : Int(A + K + 1);
    Int Te = q.k == 0 ? Int(A + 1) : (q.k == 1 ? Int(A + 2) : Int(A + K + 1));

    if (!ev.require("at least two points blown up", si(q.r), ">=", si(2), "point-window",
                    "the criterion covers r >= 2 only"))
        return;
    Rational window = make_rational(2 * s.d, T * T) - 2;
    if (!ev.require("point count inside the strict window", si(q.r), "<", sq(window),
                    "point-window", "r reaches 2d/T^2 - 2 for the window divisor T"))
        return;
    if (!ev.require("every elliptic curve degree clears the threshold", si(excluded_through), ">=",
                    si(Te), "elliptic-degree",
                    "an elliptic curve of degree <= ceil(alpha/c) + threshold offset may obstruct"))
        return;

    decomposition_steps(ev, cert, q);
    std::vector<std::pair<Int, Int>> seen;
    for (const auto& comp : cert.decomposition->components) {
        std::pair<Int, Int> key{comp.alpha_eff, comp.order};
        bool dup = false;
        for (const auto& s2 : seen) dup = dup || s2 == key;
        if (dup) continue;
        seen.push_back(key);
        Int nsq = 2 * s.d - q.r * (comp.alpha_eff + 1) * (comp.alpha_eff + 1);
        if (comp.order == 0 && comp.alpha_eff == 0) {
            if (!ev.require("pullback component is globally generated", si(2 * s.d), ">=", si(6),
                            "base-gg", "a (1,d) polarization with 2d < 6 may have base points"))
                return;
        } else if (comp.order == 0) {
            ev.note("adjoint-twist square meets the global-generation floor", si(nsq), ">=", si(5),
                    "reider");
        } else if (comp.order == 1 && comp.alpha_eff == 1) {
            ev.note("first-twist component stays inside its own window", si(q.r), "<",
                    sq(make_rational(2 * s.d, 4) - 2), "st1-very-ample");
        } else if (comp.order == 1) {
            ev.note("adjoint-twist square meets the very-ampleness floor", si(nsq), ">=", si(10),
                    "reider");
        } else {
            ev.note("adjoint-twist square meets the k-very-ampleness floor", si(nsq), ">=",
                    si(4 * comp.order + 5), "bs-criterion");
        }
    }
    if (ev.ok) {
        cert.verdict = Verdict::certified;
        cert.reason.clear();
    }
}

}  // namespace

SurfaceSpec SurfaceSpec::abelian_rho1(const Int& d) {
    SurfaceSpec s;
    s.model = SurfaceModel::abelian;
    s.d = d;
    s.picard_rank_one = true;
    return s;
}

SurfaceSpec SurfaceSpec::abelian(const Int& d) {
    SurfaceSpec s;
    s.model = SurfaceModel::abelian;
    s.d = d;
    return s;
}

SurfaceSpec SurfaceSpec::ktrivial_rho1(const Int& L2) {
    SurfaceSpec s;
    s.model = SurfaceModel::ktrivial;
    s.L2 = L2;
    s.picard_rank_one = true;
    return s;
}

void SurfaceSpec::validate() const {
    if (model == SurfaceModel::abelian) {
        if (d < 1) throw std::domain_error("SurfaceSpec: abelian surface needs d >= 1");
    } else {
        if (L2 < 1) throw std::domain_error("SurfaceSpec: K-trivial surface needs L^2 >= 1");
        if (!picard_rank_one)
            throw std::domain_error("SurfaceSpec: the K-trivial model assumes Picard rank one");
    }
    if (min_elliptic_degree && *min_elliptic_degree < 1)
        throw std::domain_error("SurfaceSpec: minimal elliptic degree must be >= 1");
    if (eps1 && surd_sign(eps1->u(), eps1->v(), eps1->m()) <= 0)
        throw std::domain_error("SurfaceSpec: asserted eps(L;1) must be positive");
}

bool SurfaceSpec::excludes_elliptic_through(const Int& t) const {
    if (no_elliptic_curves) return true;
    return min_elliptic_degree && *min_elliptic_degree > t;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "Certified";
        case Verdict::refuted: return "Refuted";
        default: return "NotCertified";
    }
}

bool step_holds(const TraceStep& s) {
    auto c = surd_compare(s.lhs, s.rhs);
    if (s.relation == "=") return c == 0;
    if (s.relation == "!=") return c != 0;
    if (s.relation == "<") return c < 0;
    if (s.relation == "<=") return c <= 0;
    if (s.relation == ">") return c > 0;
    if (s.relation == ">=") return c >= 0;
    throw std::domain_error("step_holds: unknown relation " + s.relation);
}

Decomposition decompose(const Int& c, const Int& alpha) {
    if (c < 1) throw std::domain_error("decompose: c >= 1 required");
    if (alpha < 0) throw std::domain_error("decompose: alpha >= 0 required");
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), alpha.get_mpz_t(), c.get_mpz_t());
    Int rem = alpha - c * f;
    return {f, rem == 0 ? f : f + 1, rem};
}

Int combine_htt(const std::vector<std::pair<Int, Int>>& mult_order) {
    Int total = 0;
    for (const auto& [mult, order] : mult_order) {
        if (mult < 0 || order < 0) throw std::domain_error("combine_htt: negative entry");
        total += mult * order;
    }
    return total;
}

DecompositionRecord plan_components(const Int& c, const Int& alpha, const Int& k) {
    if (alpha < k) throw std::domain_error("plan_components: alpha >= k required");
    DecompositionRecord rec;
    rec.alpha_split = decompose(c, alpha);
    rec.k_split = decompose(c, k);
    const auto& as = rec.alpha_split;
    const auto& ks = rec.k_split;
    auto add = [&rec](const Int& mult, const Int& ae, const Int& o) {
        if (mult > 0) rec.components.push_back({mult, ae, o});
    };
    if (as.rem >= ks.rem) {
        rec.branch = "rem-split";
        add(c - as.rem, as.floor_q, ks.floor_q);
        add(as.rem, as.ceil_q, ks.ceil_q);
    } else {
        /* alpha >= k with a smaller remainder forces a strictly larger floor,
         * so every copy can carry the rounded-up order. */
        rec.branch = "floor-gap";
        add(c - as.rem, as.floor_q, ks.ceil_q);
        add(as.rem, as.ceil_q, ks.ceil_q);
    }
    rec.combined = 0;
    for (const auto& comp : rec.components) rec.combined += comp.mult * comp.order;
    return rec;
}

bool certificate_recheck(const Certificate& c) {
    for (const auto& s : c.trace)
        if (!step_holds(s)) return false;
    return true;
}

Certificate gate_rho1_kva(const SurfaceSpec& s, const BundleQuery& q) {
    s.validate();
    if (s.model != SurfaceModel::abelian || !s.picard_rank_one)
        throw hypothesis_error("rho1 gate: needs a Picard-rank-one abelian surface");
    Certificate cert;
    cert.k = q.k;
    cert.gate = q.k == 0 ? "rho1-gg" : "rho1-kva";
    cert.assumptions = {"abelian-(1,d)", "picard-rank-1", "points-general"};
    if (necessity_steps(cert, IntersectionContext::abelian(s.d), q)) return cert;

    Int A = ceil_div(q.alpha, q.c), K = ceil_div(q.k, q.c);
    StepEval ev{cert};
    if (!ev.require("ampleness threshold is defined", si(s.d), ">", si(K), "ampleness-threshold",
                    "d <= ceil(k/c), so the threshold d(A+1)/(d-K) is undefined"))
        return cert;
    Rational window = make_rational(2 * s.d - (4 * K + 5), (A + 1) * (A + 1));
    if (!ev.require("point count inside the certified window", si(q.r), "<=", sq(window),
                    "point-window",
                    "r exceeds (2d - (4 ceil(k/c) + 5)) / (ceil(alpha/c) + 1)^2"))
        return cert;

    decomposition_steps(ev, cert, q);

    SeshadriBound bound = bound_pell_rho1(s.d, q.r);
    ev.note("multi-point Seshadri bound dominates its closed-form relaxation", bound.value, ">=",
            *bound.relaxed, provenance_name(bound.provenance));
    Rational threshold = make_rational(s.d * (A + 1), s.d - K);
    if (!ev.require("Seshadri relaxation clears the worst component's ampleness threshold",
                    *bound.relaxed, ">", sq(threshold), "pell-seshadri",
                    "2d/sqrt(1+2rd) fails to exceed d(ceil(alpha/c)+1)/(d-ceil(k/c))"))
        return cert;

    std::vector<std::pair<Int, Int>> seen;
    for (const auto& comp : cert.decomposition->components) {
        std::pair<Int, Int> key{comp.alpha_eff, comp.order};
        bool dup = false;
        for (const auto& s2 : seen) dup = dup || s2 == key;
        if (dup) continue;
        seen.push_back(key);
        Int nsq = 2 * s.d - q.r * (comp.alpha_eff + 1) * (comp.alpha_eff + 1);
        ev.note("adjoint-twist square meets the order floor", si(nsq), ">=",
                si(4 * comp.order + 5), comp.order == 0 ? "reider" : "bs-criterion");
    }
    if (ev.ok) {
        cert.verdict = Verdict::certified;
        cert.reason.clear();
    }
    return cert;
}

Certificate gate_ktrivial(const SurfaceSpec& s, const BundleQuery& q) {
    s.validate();
    if (s.model != SurfaceModel::ktrivial)
        throw hypothesis_error("ktrivial gate: needs a K-trivial Picard-rank-one surface");
    Certificate cert;
    cert.k = q.k;
    cert.gate = "ktrivial";
    cert.assumptions = {"k-trivial", "picard-rank-1", "points-general"};
    if (necessity_steps(cert, IntersectionContext::ktrivial(s.L2), q)) return cert;

    Int A = ceil_div(q.alpha, q.c), K = ceil_div(q.k, q.c);
    StepEval ev{cert};
    if (!ev.require("at least two points blown up", si(q.r), ">=", si(2), "point-window",
                    "the criterion covers r >= 2 only"))
        return cert;
    Rational window = make_rational(s.L2, (A + 2) * (A + 2));
    if (!ev.require("point count inside the certified window", si(q.r), "<=", sq(window),
                    "point-window", "r exceeds L^2 / (ceil(alpha/c) + 2)^2"))
        return cert;
    Int fl = floor_sqrt_rational(make_rational(s.L2, q.r));
    if (!ev.require("integral Seshadri floor clears the threshold", si(fl), ">=", si(A + 2),
                    "seshadri-floor", "floor(sqrt(L^2/r)) < ceil(alpha/c) + 2"))
        return cert;
    if (!ev.require("ampleness margin stays positive", si(s.L2 - K * (A + 2)), ">", si(0),
                    "ampleness-threshold", "L^2 <= ceil(k/c) (ceil(alpha/c) + 2)"))
        return cert;

    decomposition_steps(ev, cert, q);
    std::vector<std::pair<Int, Int>> seen;
    for (const auto& comp : cert.decomposition->components) {
        std::pair<Int, Int> key{comp.alpha_eff, comp.order};
        bool dup = false;
        for (const auto& s2 : seen) dup = dup || s2 == key;
        if (dup) continue;
        seen.push_back(key);
        Int nsq = s.L2 - q.r * (comp.alpha_eff + 1) * (comp.alpha_eff + 1);
        ev.note("adjoint-twist square meets the order floor", si(nsq), ">=",
                si(4 * comp.order + 5), comp.order == 0 ? "reider" : "bs-criterion");
    }
    if (ev.ok) {
        cert.verdict = Verdict::certified;
        cert.reason.clear();
    }
    return cert;
}

Certificate gate_any_picard(const SurfaceSpec& s, const BundleQuery& q) {
    s.validate();
    if (s.model != SurfaceModel::abelian)
        throw hypothesis_error("any-picard gate: needs an abelian surface");
    if (!s.has_elliptic_assertion())
        throw hypothesis_error("any-picard gate: needs an elliptic-curve degree assertion");
    Certificate cert;
    cert.k = q.k;
    cert.gate = q.k == 0 ? "any-picard-gg" : (q.k == 1 ? "any-picard-va" : "any-picard-kva");
    cert.assumptions = {"abelian-(1,d)", "points-general",
                        s.no_elliptic_curves ? "no-elliptic-curves"
                                             : "min-elliptic-degree-asserted"};
    if (necessity_steps(cert, IntersectionContext::abelian(s.d), q)) return cert;

    StepEval ev{cert};
    /* with no elliptic curves at all, any finite threshold is cleared; 2d
     * bounds every relevant threshold (window forces r >= 2 => T^2 < d) */
    Int excluded = s.no_elliptic_curves ? Int(2 * s.d + ceil_div(q.alpha, q.c) + q.k + 2)
                                        : Int(*s.min_elliptic_degree - 1);
    any_picard_core(ev, cert, s, q, excluded);
    return cert;
}

Certificate gate_corollaries(const SurfaceSpec& s, const BundleQuery& q) {
    s.validate();
    if (s.model != SurfaceModel::abelian)
        throw hypothesis_error("corollary gate: needs an abelian surface");
    if (!s.very_general && !s.eps1)
        throw hypothesis_error(
            "corollary gate: needs a very-general flag or a one-point Seshadri assertion");
    Certificate cert;
    cert.k = q.k;
    cert.gate = "corollary";
    cert.assumptions = {"abelian-(1,d)", "points-general"};
    if (necessity_steps(cert, IntersectionContext::abelian(s.d), q)) return cert;
    if (q.k > 1) {
        cert.verdict = Verdict::not_certified;
        cert.reason = "the corollaries cover k <= 1 only";
        return cert;
    }

    Int A = ceil_div(q.alpha, q.c);
    Int t = q.k == 0 ? A + 1 : A + 2;
    StepEval ev{cert};

    bool vg_ok = s.very_general && make_rational(16 * s.d) > make_rational(81 * t * t);
    Surd eps_threshold(make_rational(5 * t, 2), make_rational(-t, 2), 5);  // (5-sqrt5)/2 * t
    bool eps_ok = s.eps1.has_value() && surd_less(eps_threshold, *s.eps1) &&
                  make_rational(2 * s.d) >= make_rational(5 * t * t);

    if (vg_ok) {
        cert.gate = "corollary-very-general";
        cert.assumptions.push_back("very-general-surface");
        ev.note("degree excludes low-degree elliptic curves on a very general surface", si(s.d),
                ">", sq(make_rational(81 * t * t, 16)), "very-general-elliptic-bound");
    } else if (eps_ok) {
        cert.gate = "corollary-seshadri";
        cert.assumptions.push_back("one-point-seshadri-asserted");
        ev.note("asserted one-point Seshadri bound clears the golden-ratio threshold", *s.eps1,
                ">", eps_threshold, "seshadri-elliptic-bound");
        ev.note("degree supports the one-point argument", si(2 * s.d), ">=", si(5 * t * t),
                "degree-bound");
    } else {
        /* record the failed attempts honestly, with the relations that hold */
        if (s.very_general)
            ev.require("degree excludes low-degree elliptic curves on a very general surface",
                       si(s.d), ">", sq(make_rational(81 * t * t, 16)),
                       "very-general-elliptic-bound", "d <= 81 t^2 / 16 on a very general surface");
        ev.ok = true;
        if (s.eps1) {
            ev.require("asserted one-point Seshadri bound clears the golden-ratio threshold",
                       *s.eps1, ">", eps_threshold, "seshadri-elliptic-bound",
                       "eps(L;1) <= (5 - sqrt 5)/2 * t");
            if (ev.ok)
                ev.require("degree supports the one-point argument", si(2 * s.d), ">=",
                           si(5 * t * t), "degree-bound", "2d < 5 t^2");
        }
        cert.verdict = Verdict::not_certified;
        if (cert.reason.empty()) cert.reason = "no corollary hypothesis applies";
        return cert;
    }

    any_picard_core(ev, cert, s, q, t);
    return cert;
}

Certificate certify(const SurfaceSpec& s, const BundleQuery& q) {
    s.validate();
    if (q.alpha < q.k) {
        Certificate cert;
        cert.k = q.k;
        cert.gate = "necessity";
        cert.assumptions = {"points-general"};
        IntersectionContext ctx = s.model == SurfaceModel::abelian
                                      ? IntersectionContext::abelian(s.d)
                                      : IntersectionContext::ktrivial(s.L2);
        necessity_steps(cert, ctx, q);
        return cert;
    }

    std::vector<std::function<Certificate()>> gates;
    if (s.model == SurfaceModel::abelian && s.picard_rank_one)
        gates.push_back([&] { return gate_rho1_kva(s, q); });
    if (s.model == SurfaceModel::ktrivial) gates.push_back([&] { return gate_ktrivial(s, q); });
    if (s.model == SurfaceModel::abelian && s.has_elliptic_assertion())
        gates.push_back([&] { return gate_any_picard(s, q); });
    if (s.model == SurfaceModel::abelian && (s.very_general || s.eps1))
        gates.push_back([&] { return gate_corollaries(s, q); });

    std::vector<std::pair<std::string, std::string>> declined;
    for (const auto& gate : gates) {
        Certificate cert = gate();
        if (cert.verdict == Verdict::certified) return cert;
        declined.emplace_back(cert.gate, cert.reason);
    }

    Certificate cert;
    cert.k = q.k;
    cert.gate = "dispatcher";
    cert.assumptions = {"points-general"};
    cert.reason = declined.empty() ? "no criterion applies to this surface specification"
                                   : "no applicable criterion certified the bundle";
    cert.gate_reasons = std::move(declined);
    IntersectionContext ctx = s.model == SurfaceModel::abelian
                                  ? IntersectionContext::abelian(s.d)
                                  : IntersectionContext::ktrivial(s.L2);
    necessity_steps(cert, ctx, q);
    cert.verdict = Verdict::not_certified;
    return cert;
}

}  // namespace kva
