#ifndef KVA_TEST_MPFR_ORACLE_HPP
#define KVA_TEST_MPFR_ORACLE_HPP

/*
 * Interval-arithmetic ordering oracle for surds: evaluate u + v*sqrt(m) with
 * MPFR at directed roundings to get a guaranteed enclosure, escalating the
 * precision until the enclosures of two distinct values separate.  400 bits
 * already exceed 100 decimal digits; equal values are expected to stay
 * overlapping at every precision and are confirmed structurally by the test.
 */

#include <mpfr.h>

#include <optional>

#include "kva/exactmath.hpp"

namespace kva_test {

struct Enclosure {
    mpfr_t lo, hi;
    explicit Enclosure(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~Enclosure() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Enclosure(const Enclosure&) = delete;
    Enclosure& operator=(const Enclosure&) = delete;
};

inline void eval_surd(const kva::Surd& s, Enclosure& out, mpfr_prec_t prec) {
    mpfr_t term;
    mpfr_init2(term, prec);
    for (int dir = 0; dir < 2; ++dir) {
        mpfr_rnd_t rnd = dir == 0 ? MPFR_RNDD : MPFR_RNDU;
        mpfr_ptr dst = dir == 0 ? out.lo : out.hi;
        /* for a true directed bound of v*sqrt(m), sqrt(m) must be rounded
         * against the sign of v before the directed multiply */
        mpfr_rnd_t sqrt_rnd = rnd;
        if (s.v() < 0) sqrt_rnd = (rnd == MPFR_RNDD) ? MPFR_RNDU : MPFR_RNDD;
        mpfr_set_z(term, s.m().get_mpz_t(), sqrt_rnd);
        mpfr_sqrt(term, term, sqrt_rnd);
        mpfr_mul_q(term, term, s.v().get_mpq_t(), rnd);
        mpfr_set_q(dst, s.u().get_mpq_t(), rnd);
        mpfr_add(dst, dst, term, rnd);
    }
    mpfr_clear(term);
}

/* -1, 0 (undecided: enclosures overlap at max precision), +1 */
inline std::optional<int> interval_order(const kva::Surd& a, const kva::Surd& b) {
    for (mpfr_prec_t prec = 400; prec <= 1600; prec *= 2) {
        Enclosure ea(prec), eb(prec);
        eval_surd(a, ea, prec);
        eval_surd(b, eb, prec);
        if (mpfr_cmp(ea.hi, eb.lo) < 0) return -1;
        if (mpfr_cmp(eb.hi, ea.lo) < 0) return 1;
    }
    return std::nullopt;
}

}  // namespace kva_test

#endif
