#ifndef KVA_OBSTRUCTION_HPP
#define KVA_OBSTRUCTION_HPP

/*
 * Exhaustive enumeration of candidate obstruction divisors against the Reider
 * and Beltrametti-Sommese numeric windows, with the named pruning rules used
 * by the case eliminations.  Two searches:
 *
 *   search_rho1      Picard-rank-one model: candidates are exceptional-only
 *                    classes sum a_i E_i and pullback classes
 *                    a pi^* L - sum m_i E_i.  The pullback coefficient is
 *                    capped by pairing with the nef class pi^* L - b sum E_i,
 *                    b the certified Pell Seshadri bound, so the scan is
 *                    provably exhaustive.
 *
 *   search_profiles  any Picard rank: candidates are numeric profiles
 *                    (ell, delta, s, q) = (L.D_S, D_S^2, sum m_i, sum m_i^2);
 *                    the ell cap comes from the Hodge-index, Cauchy-Schwarz
 *                    and window inequalities (largest root of an explicit
 *                    integer quadratic).
 *
 * Every search records its cap derivation; a user cap below the derived
 * requirement raises cap_error rather than truncating.  Both searches have an
 * OpenMP kernel over the outer loop (a, resp. ell) and a serial reference
 * implementation; buckets are merged in loop order so output is independent
 * of scheduling.
 */

#include <optional>
#include <string>
#include <vector>

#include "kva/certify.hpp"
#include "kva/exactmath.hpp"

namespace kva {

struct ObstructionWindow {
    enum class Mode { reider_gg, reider_va, bs_kva };
    Mode mode;
    Int k;

    bool admits(const Int& nd, const Int& d2) const;
    /* the d2 values admitted together with nd, ascending */
    std::vector<Int> admissible_d2(const Int& nd) const;
    const char* name() const;

    /* window matching the proof for order k of the profile search:
     * k=0 Reider global generation, k=1 Reider very ampleness, else BS */
    static ObstructionWindow for_profiles(const Int& k);
    /* window used by the rank-one proofs: k=0 Reider, else BS */
    static ObstructionWindow for_rho1(const Int& k);
    /* explicit mode, carrying the order the mode encodes (gg 0, va 1, BS k) */
    static ObstructionWindow for_mode(Mode m, const Int& k);
};

struct cap_error : std::runtime_error {
    std::optional<Int> required;  // empty: no finite cap is provably exhaustive

    cap_error(const std::string& msg, std::optional<Int> req)
        : std::runtime_error(msg), required(std::move(req)) {}
};

/* decides existence of m_1..m_r >= 0 with sum m_i = s and sum m_i^2 = q */
bool feasible_vector(const Int& r, const Int& s, const Int& q);
/* canonical non-increasing realization, when one exists */
std::optional<std::vector<Int>> feasible_witness(const Int& r, const Int& s, const Int& q);

struct PruneReport {
    std::string candidate;
    std::string rule;
    TraceStep violated;  // requirement the candidate fails; step_holds() is false
};

struct Survivor {
    std::string kind;  // exceptional-class | pullback-class | profile
    Int a;             // pullback coefficient, 0 for the other kinds
    Int ell, delta;    // L.D_S and D_S^2
    Int s, q;          // sum and square sum of multiplicities
    Int nd, d2;        // window coordinates N.D and D^2
    std::vector<Int> witness;  // non-increasing multiplicities realizing (s, q)
    std::string note;
};

struct SearchOutcome {
    std::string window;
    Int cap = 0;  // pullback cap a (rho1) or ell cap (profiles) actually enumerated
    bool exhaustive = false;
    Int examined = 0;  // window-plausible candidates inspected
    std::vector<std::string> derivation;  // cap/bound justifications
    std::vector<PruneReport> pruned;
    std::vector<Survivor> survivors;
};

struct Rho1Search {
    Int d, alpha, k, r;  // per-component coefficient alpha (callers with
                         // c > 1 pass ceil(alpha/c), ceil(k/c))
    std::optional<Int> a_max;
    /* exploratory override; the default follows the proofs via for_rho1(k) */
    std::optional<ObstructionWindow::Mode> window;
};

struct ProfileSearch {
    Int d, alpha, k, r;
    Int min_elliptic_degree = 0;  // 0: nothing asserted (degree >= 1 still holds)
    std::optional<Int> ell_max;
    std::optional<ObstructionWindow::Mode> window;
};

SearchOutcome search_rho1(const Rho1Search& in);
SearchOutcome search_rho1_serial(const Rho1Search& in);
SearchOutcome search_profiles(const ProfileSearch& in);
SearchOutcome search_profiles_serial(const ProfileSearch& in);

}  // namespace kva

#endif
