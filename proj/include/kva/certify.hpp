#ifndef KVA_CERTIFY_HPP
#define KVA_CERTIFY_HPP

/*
 * Certificate-producing decision procedure for k-very ampleness of
 * M = c * pi^* L - alpha * sum E_i on the blow-up of a polarized surface at
 * r general points.  Each gate transcribes one closed-form criterion:
 *
 *   rho1-gg / rho1-kva    Picard-rank-one (1,d) abelian surface, Pell-driven
 *                         Seshadri bound, window r <= (2d-(4K+5))/(A+1)^2
 *   ktrivial              K-trivial Picard-rank-one surface, floor bound,
 *                         window 2 <= r <= L^2/(A+2)^2
 *   any-picard-*          any abelian surface with an asserted minimal
 *                         elliptic-curve degree, strict window
 *                         2 <= r < 2d/T^2 - 2
 *   corollary-*           hypotheses that discharge the elliptic assertion
 *                         (very general surface, or a one-point Seshadri
 *                         assertion compared exactly against (5-sqrt5)/2 t)
 *
 * with A = ceil(alpha/c), K = ceil(k/c).  Verdicts: Certified, Refuted
 * (exactly when alpha < k, since M.E_j = alpha), NotCertified (criteria
 * inconclusive).  Every certificate carries a trace of exact inequality
 * steps that can be re-evaluated independently (certificate_recheck).
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kva/exactmath.hpp"
#include "kva/lattice.hpp"

namespace kva {

struct hypothesis_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct SurfaceSpec {
    SurfaceModel model = SurfaceModel::abelian;
    Int d = 0;   // abelian: polarization type (1, d)
    Int L2 = 0;  // ktrivial: self-intersection of the ample generator
    bool picard_rank_one = false;
    std::optional<Int> min_elliptic_degree;  // asserted minimal degree of an elliptic curve
    bool no_elliptic_curves = false;         // stronger: no elliptic curves at all
    bool very_general = false;
    std::optional<Surd> eps1;  // asserted lower bound for eps(L; 1)

    static SurfaceSpec abelian_rho1(const Int& d);
    static SurfaceSpec abelian(const Int& d);
    static SurfaceSpec ktrivial_rho1(const Int& L2);

    /* throws std::domain_error on inconsistent data */
    void validate() const;
    bool has_elliptic_assertion() const {
        return no_elliptic_curves || min_elliptic_degree.has_value();
    }
    /* does the assertion exclude every elliptic curve of degree <= t? */
    bool excludes_elliptic_through(const Int& t) const;
    Int polarization_square() const { return model == SurfaceModel::abelian ? 2 * d : L2; }
};

enum class Verdict { certified, refuted, not_certified };

const char* verdict_name(Verdict v);

struct TraceStep {
    std::string description;
    Surd lhs;
    std::string relation;  // one of = != < <= > >=
    Surd rhs;
    std::string anchor;  // criterion the step leans on
};

/* re-evaluate one step with exact arithmetic */
bool step_holds(const TraceStep& s);

struct Decomposition {
    Int floor_q, ceil_q, rem;  // alpha = (c - rem) floor + rem ceil
};

/* floor/ceil split of alpha by c with remainder; c >= 1, alpha >= 0 */
Decomposition decompose(const Int& c, const Int& alpha);

/* order of a tensor product of k_i-very-ample factors: sum mult_i * order_i */
Int combine_htt(const std::vector<std::pair<Int, Int>>& mult_order);

struct ComponentPlan {
    Int mult;       // tensor multiplicity
    Int alpha_eff;  // per-component coefficient on sum E_i
    Int order;      // very-ampleness order the component must reach
};

struct DecompositionRecord {
    Decomposition alpha_split, k_split;
    std::string branch;  // "rem-split" or "floor-gap"
    std::vector<ComponentPlan> components;
    Int combined;
};

/* component plan realizing order k for c * (...) - alpha * sum E_i; requires
 * alpha >= k */
DecompositionRecord plan_components(const Int& c, const Int& alpha, const Int& k);

struct Certificate {
    Verdict verdict = Verdict::not_certified;
    Int k = 0;         // order asked about (echoed)
    std::string gate;  // gate that produced the verdict
    std::string reason;
    std::vector<TraceStep> trace;
    std::vector<std::string> assumptions;
    std::optional<DecompositionRecord> decomposition;
    /* dispatcher aggregation: (gate, reason) for every gate that declined */
    std::vector<std::pair<std::string, std::string>> gate_reasons;
};

/* all trace steps re-evaluate to true */
bool certificate_recheck(const Certificate& c);

/* individual gates; each throws hypothesis_error when the surface kind does
 * not match, and Refutes exactly when alpha < k */
Certificate gate_rho1_kva(const SurfaceSpec& s, const BundleQuery& q);
Certificate gate_ktrivial(const SurfaceSpec& s, const BundleQuery& q);
Certificate gate_any_picard(const SurfaceSpec& s, const BundleQuery& q);
Certificate gate_corollaries(const SurfaceSpec& s, const BundleQuery& q);

/* fixed-order dispatcher over all applicable gates */
Certificate certify(const SurfaceSpec& s, const BundleQuery& q);

}  // namespace kva

#endif
