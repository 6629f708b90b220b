#pragma once

// Exact rationals with an inline 64-bit fast path and a GMP fallback.
//
// Values stay in the small representation while numerator and denominator
// fit in int64_t; any overflow promotes to mpq_class, and results that fit
// again are demoted. All values are kept in lowest terms with a positive
// denominator, so equality is structural.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace nichols {

class Rational {
public:
    Rational() = default;
    Rational(int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
        if (n == INT64_MIN) promote_min();
    }
    Rational(int64_t n, int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "n" or "n/d" (decimal, optional sign). Throws std::invalid_argument.
    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    /// True when numerator and denominator are held as machine integers.
    bool is_small() const { return !big_; }
    int64_t small_num() const { return num_; }
    int64_t small_den() const { return den_; }
    std::string numerator_str() const;
    std::string denominator_str() const;
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return small_int(s);
        }
        return add_slow(a, b);
    }
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1) {
            int64_t p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) return small_int(p);
        }
        return mul_slow(a, b);
    }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    /// a += b * c, the inner loop of every convolution and elimination step.
    void add_mul(const Rational& b, const Rational& c) {
        if (b.is_zero() || c.is_zero()) return;
        *this = *this + b * c;
    }
    /// Multiplication by a machine integer (reduction tables hold small ints).
    Rational times(int64_t k) const;

    friend bool operator==(const Rational& a, const Rational& b);

private:
    void set_big(mpq_class q);
    void promote_min();
    static Rational small_int(int64_t n) {
        Rational r;
        r.num_ = n;
        return r;
    }
    static Rational add_slow(const Rational& a, const Rational& b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    void demote();

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace nichols
