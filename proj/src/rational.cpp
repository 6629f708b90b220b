#include "nichols/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace nichols {

namespace {

using i128 = __int128;

constexpr i128 kMax = INT64_MAX;
constexpr i128 kMin = -static_cast<i128>(INT64_MAX);  // keep negation safe

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v <= kMax && v >= kMin; }

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

void Rational::promote_min() { set_big(mpq_class(mpz_class(static_cast<long>(INT64_MIN)))); }

Rational::Rational(int64_t n, int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    if (fits(nn) && fits(dd)) {
        num_ = static_cast<int64_t>(nn);
        den_ = static_cast<int64_t>(dd);
    } else {
        mpq_class q(to_mpz(nn), to_mpz(dd));
        q.canonicalize();
        set_big(std::move(q));
    }
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
}

void Rational::set_big(mpq_class q) {
    big_ = std::make_unique<mpq_class>(std::move(q));
    demote();
}

void Rational::demote() {
    if (!big_) return;
    const mpz_class& n = big_->get_num();
    const mpz_class& d = big_->get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        long nv = n.get_si();
        long dv = d.get_si();
        if (nv != LONG_MIN && dv != LONG_MIN) {
            num_ = nv;
            den_ = dv;
            big_.reset();
        }
    }
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
}

std::string Rational::numerator_str() const {
    return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
    return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        i128 d = static_cast<i128>(a.den_) * b.den_;
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) return Rational();
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = static_cast<int64_t>(n);
            r.den_ = static_cast<int64_t>(d);
            return r;
        }
        mpq_class q(to_mpz(n), to_mpz(d));
        return Rational(q);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        // cross-cancel first so the 128-bit products stay small
        i128 g1 = gcd128(a.num_, b.den_);
        i128 g2 = gcd128(b.num_, a.den_);
        i128 n = (static_cast<i128>(a.num_) / g1) * (static_cast<i128>(b.num_) / g2);
        i128 d = (static_cast<i128>(a.den_) / g2) * (static_cast<i128>(b.den_) / g1);
        if (fits(n) && fits(d)) {
            Rational r;
            r.num_ = static_cast<int64_t>(n);
            r.den_ = static_cast<int64_t>(d);
            return r;
        }
        mpq_class q(to_mpz(n), to_mpz(d));
        return Rational(q);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!b.big_) {
        Rational inv;
        if (b.num_ < 0) {
            inv.num_ = -b.den_;
            inv.den_ = -b.num_;
        } else {
            inv.num_ = b.den_;
            inv.den_ = b.num_;
        }
        return a * inv;
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

Rational Rational::times(int64_t k) const {
    if (k == 0 || is_zero()) return Rational();
    if (k == 1) return *this;
    if (k == -1) return -*this;
    return *this * Rational(k);
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // both canonical; a big value never fits the small form
}

}  // namespace nichols
