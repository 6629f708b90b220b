#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// A CycNum of order N stores the canonical remainder of its polynomial
// representative modulo the N-th cyclotomic polynomial, i.e. phi(N)
// rational coefficients on 1, z, ..., z^{phi(N)-1} with z = zeta_N.
// Values of different orders combine by embedding both into Q(zeta_lcm).

#include "nichols/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

struct CyclotomicContext;

class CycNum {
public:
    /// Zero in Q(zeta_1) = Q.
    CycNum();

    static CycNum zero(int order);
    static CycNum one(int order);
    static CycNum integer(int order, int64_t k);
    static CycNum rational(int order, const Rational& r);
    /// zeta_order^exponent.
    static CycNum root(int order, int64_t exponent);
    /// Interprets coeffs[k] as the coefficient of zeta_order^k; any length is accepted
    /// and indices wrap modulo the order (x^N = 1).
    static CycNum from_coeffs(int order, const std::vector<Rational>& coeffs);

    int order() const { return order_; }
    /// Canonical coefficients, length phi(order).
    const std::vector<Rational>& canonical() const { return c_; }
    /// Canonical coefficients padded to length order (the x^N - 1 view).
    std::vector<Rational> coeffs() const;

    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q.
    bool is_rational() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
    friend bool operator==(const CycNum& a, const CycNum& b);

    /// this += b * c with all three of the same order (hot path of elimination).
    void add_mul(const CycNum& b, const CycNum& c);
    /// Multiplication by zeta_order^e.
    CycNum times_root(int64_t e) const;
    CycNum times(const Rational& r) const;

    CycNum inverse() const;
    CycNum pow(int64_t n) const;
    /// Image under the Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
    CycNum conjugate(int64_t k) const;
    /// Canonical map Q(zeta_N) -> Q(zeta_M), N | M.
    CycNum embed(int new_order) const;

    /// Human-readable form in the variable z = zeta_order.
    std::string str() const;

private:
    CycNum(int order, const CyclotomicContext* ctx);
    static void align(CycNum& a, CycNum& b);

    int order_ = 1;
    const CyclotomicContext* ctx_ = nullptr;
    std::vector<Rational> c_;
};

/// Element zeta_order^exponent kept symbolically.
struct RootOfUnity {
    int order = 1;
    int64_t exponent = 0;

    RootOfUnity() = default;
    RootOfUnity(int n, int64_t e);

    /// order / gcd(order, exponent).
    int multiplicative_order() const;
    bool is_one() const { return exponent == 0; }
    bool is_minus_one() const { return order % 2 == 0 && exponent == order / 2; }
    CycNum value() const { return CycNum::root(order, exponent); }
    RootOfUnity inverse() const { return {order, -exponent}; }
    RootOfUnity pow(int64_t n) const { return {order, exponent * n}; }
    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) = default;

    /// Recovers (order, exponent) from a CycNum that is exactly a power of zeta_order.
    static std::optional<RootOfUnity> from_cyc(const CycNum& q);
};

/// Least n >= 1 with q^n = 1, or nullopt when q is not a root of unity.
/// Throws std::domain_error for q = 0.
std::optional<int> mult_order(const CycNum& q);

/// (n)_q = 1 + q + ... + q^{n-1}.
CycNum q_number(int n, const CycNum& q);
/// n!_q = (1)_q (2)_q ... (n)_q.
CycNum q_factorial(int n, const CycNum& q);
/// Gaussian binomial; uses the factorial quotient when it is defined and
/// the q-Pascal recursion otherwise.
CycNum q_binomial(int n, int k, const CycNum& q);

int euler_phi(int n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<int64_t> cyclotomic_polynomial(int n);

}  // namespace nichols
