#ifndef KVA_EXACTMATH_HPP
#define KVA_EXACTMATH_HPP

/*
 * Exact scalar arithmetic for the certifier: arbitrary-precision integers,
 * canonical rationals, and quadratic surds u + v*sqrt(m) with an exact
 * three-way comparison.  No floating point is used anywhere in this module;
 * every predicate the certificates depend on reduces to integer arithmetic.
 */

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace kva {

using Int = mpz_class;

/* Canonical rational: positive denominator, gcd(num, den) = 1.  mpq_class
 * keeps arithmetic results canonical as long as every value is constructed
 * through make_rational (mpq_class(a, b) alone does not canonicalize). */
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline const Int num(const Rational& q) { return q.get_num(); }
inline const Int den(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/* floor(p/q) for a rational, exact. */
Int floor_rational(const Rational& q);

/* Integer square root: returns (floor(sqrt(n)), n is a perfect square).
 * Throws std::domain_error for negative input. */
std::pair<Int, bool> isqrt(const Int& n);

/* floor(sqrt(q)) for a non-negative rational, exact:
 * the largest integer n with n^2 <= q. */
Int floor_sqrt_rational(const Rational& q);

/*
 * Quadratic surd u + v*sqrt(m), u and v rational, m a non-negative integer.
 * Normal form: m squarefree and >= 2 with v != 0, or (v, m) = (0, 0) for a
 * rational value.  Square factors of the radicand migrate into v; sqrt(0)
 * and sqrt(1) fold into u.  Equality of normalized surds is field-wise.
 */
class Surd {
  public:
    Surd() : u_(0), v_(0), m_(0) {}
    explicit Surd(const Rational& u) : u_(u), v_(0), m_(0) {}
    Surd(Rational u, Rational v, Int m);

    static Surd from_rational(const Rational& q) { return Surd(q); }
    static Surd from_int(const Int& n) { return Surd(make_rational(n)); }
    /* sqrt(n) for integer n >= 0, normalized. */
    static Surd sqrt_of_integer(const Int& n);
    /* sqrt(p/q) for a non-negative rational, as sqrt(p*q)/q. */
    static Surd sqrt_of_rational(const Rational& q);

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Int& m() const { return m_; }

    bool is_rational() const { return v_ == 0; }
    /* Throws std::domain_error unless is_rational(). */
    const Rational& as_rational() const;

    Surd operator-() const;
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const;
    /* Product; throws std::domain_error("unsupported surd arithmetic...")
     * when the result needs two distinct radicals. */
    Surd operator*(const Surd& o) const;

    Surd scaled(const Rational& c) const;

    bool operator==(const Surd& o) const {
        return u_ == o.u_ && v_ == o.v_ && m_ == o.m_;
    }

    std::string str() const;

  private:
    Rational u_, v_;
    Int m_;
    void normalize();
};

/*
 * Exact three-way comparison of two surds.  At most two distinct irrational
 * radicals can occur in a - b; the comparison isolates one radical and squares
 * with sign case analysis (at most two squarings).  More than two distinct
 * radicals cannot arise from Surd values, but arithmetic that would create
 * them throws std::domain_error before any comparison happens.
 */
std::strong_ordering surd_compare(const Surd& a, const Surd& b);

inline bool surd_less(const Surd& a, const Surd& b) {
    return surd_compare(a, b) == std::strong_ordering::less;
}

inline const Surd& surd_min(const Surd& a, const Surd& b) {
    return surd_less(b, a) ? b : a;
}

/* sign of u + v*sqrt(m): -1, 0, +1.  m must be 0 (rational case, v ignored
 * when 0) or a non-square >= 2; callers pass normalized data. */
int surd_sign(const Rational& u, const Rational& v, const Int& m);

/* Largest squarefree divisor decomposition: n = s^2 * f, f squarefree.
 * Returns (s, f).  n >= 0. */
std::pair<Int, Int> extract_square(const Int& n);

}  // namespace kva

#endif
