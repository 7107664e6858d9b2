#include "kva/exactmath.hpp"

#include <sstream>

namespace kva {

Int floor_rational(const Rational& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

std::pair<Int, bool> isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative integer");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {root, rem == 0};
}

Int floor_sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("floor_sqrt_rational of negative rational");
    /* largest n with n^2 <= p/q  <=>  n^2 <= floor(p/q) since n^2 is an integer */
    return isqrt(floor_rational(q)).first;
}

std::pair<Int, Int> extract_square(const Int& n) {
    if (n < 0) throw std::domain_error("extract_square of negative integer");
    if (n == 0) return {1, 0};
    Int s = 1, f = n;
    /* peel square factors by trial division; what remains is squarefree
     * unless it is a perfect square itself (caught below) or has two prime
     * square factors beyond the trial bound, i.e. exceeds 10^12 -- radicands
     * in this project stay far below that */
    for (Int p = 2; p * p <= f && p <= 1000000; ++p) {
        Int pp = p * p;
        while (f % pp == 0) {
            f /= pp;
            s *= p;
        }
    }
    auto [r, exact] = isqrt(f);
    if (exact) {
        s *= r;
        f = 1;
    }
    return {s, f};
}

Surd::Surd(Rational u, Rational v, Int m) : u_(std::move(u)), v_(std::move(v)), m_(std::move(m)) {
    if (m_ < 0) throw std::domain_error("surd with negative radicand");
    normalize();
}

void Surd::normalize() {
    if (v_ == 0 || m_ == 0) {
        v_ = 0;
        m_ = 0;
        return;
    }
    auto [s, f] = extract_square(m_);
    if (s != 1) {
        v_ *= make_rational(s);
        m_ = f;
    }
    if (m_ == 1) {
        u_ += v_;
        v_ = 0;
        m_ = 0;
    }
}

Surd Surd::sqrt_of_integer(const Int& n) {
    if (n < 0) throw std::domain_error("sqrt of negative integer");
    return Surd(make_rational(0), make_rational(1), n);
}

Surd Surd::sqrt_of_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    /* sqrt(p/q) = sqrt(p*q) / q */
    return Surd(make_rational(0), make_rational(1, q.get_den()), q.get_num() * q.get_den());
}

const Rational& Surd::as_rational() const {
    if (!is_rational()) throw std::domain_error("surd is irrational");
    return u_;
}

Surd Surd::operator-() const {
    Surd r;
    r.u_ = -u_;
    r.v_ = -v_;
    r.m_ = m_;
    return r;
}

Surd Surd::operator+(const Surd& o) const {
    if (v_ == 0) return Surd(u_ + o.u_, o.v_, o.m_);
    if (o.v_ == 0) return Surd(u_ + o.u_, v_, m_);
    if (m_ == o.m_) return Surd(u_ + o.u_, v_ + o.v_, m_);
    throw std::domain_error("unsupported surd arithmetic: sum with two distinct radicals");
}

Surd Surd::operator-(const Surd& o) const { return *this + (-o); }

Surd Surd::operator*(const Surd& o) const {
    /* (u + v sqrt(m)) (u' + v' sqrt(m')): representable when the radical part
     * collapses to a single radicand: same m, or one factor rational, or both
     * pure radicals (product radicand m*m'). */
    if (v_ == 0) return Surd(u_ * o.u_, u_ * o.v_, o.m_);
    if (o.v_ == 0) return Surd(u_ * o.u_, v_ * o.u_, m_);
    if (m_ == o.m_)
        return Surd(u_ * o.u_ + v_ * o.v_ * make_rational(m_), u_ * o.v_ + v_ * o.u_, m_);
    if (u_ == 0 && o.u_ == 0)
        return Surd(make_rational(0), v_ * o.v_, m_ * o.m_);
    throw std::domain_error("unsupported surd arithmetic: product with two distinct radicals");
}

Surd Surd::scaled(const Rational& c) const { return Surd(u_ * c, v_ * c, m_); }

std::string Surd::str() const {
    std::ostringstream os;
    if (v_ == 0) {
        os << u_;
    } else {
        if (u_ != 0) os << u_ << " + ";
        os << v_ << "*sqrt(" << m_ << ")";
    }
    return os.str();
}

namespace {
int sign_of(const Rational& q) { return sgn(q); }
}  // namespace

int surd_sign(const Rational& u, const Rational& v, const Int& m) {
    if (v == 0 || m == 0) return sign_of(u);
    if (u == 0) return sign_of(v);
    int su = sign_of(u), sv = sign_of(v);
    if (su == sv) return su;
    /* opposite signs: |u| vs |v| sqrt(m), squared (one squaring, exact) */
    Rational lhs = u * u;
    Rational rhs = v * v * make_rational(m);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? su : sv;
}

std::strong_ordering surd_compare(const Surd& a, const Surd& b) {
    auto order = [](int s) {
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    };

    const Rational du = a.u() - b.u();

    if (a.is_rational() && b.is_rational()) return order(sign_of(du));

    if (a.is_rational() || b.is_rational() || a.m() == b.m()) {
        /* single radical in the difference */
        Rational w;
        Int m;
        if (a.is_rational()) {
            w = -b.v();
            m = b.m();
        } else if (b.is_rational()) {
            w = a.v();
            m = a.m();
        } else {
            w = a.v() - b.v();
            m = a.m();
        }
        return order(surd_sign(du, w, w == 0 ? Int(0) : m));
    }

    /* two distinct radicals: sign of (du + v1 sqrt(m1)) - v2 sqrt(m2).
     * Compare X = du + v1 sqrt(m1) against Y = v2 sqrt(m2) by sign analysis,
     * then square once more if both sides share a sign. */
    const Rational& v1 = a.v();
    const Int& m1 = a.m();
    const Rational& v2 = b.v();
    const Int& m2 = b.m();

    int sx = surd_sign(du, v1, m1);
    int sy = sign_of(v2);
    if (sx != sy) return order(sx < sy ? -1 : 1);
    if (sx == 0) return std::strong_ordering::equal;

    /* X and Y strictly share sign s; compare X^2 vs Y^2 and flip if negative.
     * X^2 - Y^2 = (du^2 + v1^2 m1 - v2^2 m2) + 2 du v1 sqrt(m1): one radical. */
    Rational c = du * du + v1 * v1 * make_rational(m1) - v2 * v2 * make_rational(m2);
    Rational w = 2 * du * v1;
    int sq = surd_sign(c, w, w == 0 ? Int(0) : m1);
    return order(sx > 0 ? sq : -sq);
}

}  // namespace kva
