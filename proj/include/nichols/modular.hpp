#pragma once

// Images of Q(zeta_N) modulo primes p = 1 (mod N).
//
// Z[zeta_N] localized away from p maps onto F_p^phi(N) by sending zeta_N to
// each primitive N-th root of unity mod p. Linear algebra over that product
// of fields runs lane by lane; the caller certifies every conclusion in exact
// arithmetic, so a bad prime can only cost a retry.

#include "nichols/cyclotomic.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nichols {

/// Raised when a prime divides a denominator or makes a pivot vanish in some lane only.
struct UnluckyPrime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime_u64(uint64_t n);

/// Primes below 2^62, congruent to 1 modulo n, in decreasing order.
class PrimeSequence {
public:
    explicit PrimeSequence(int n);
    uint64_t next();

private:
    uint64_t n_;
    uint64_t cur_;
};

class ModField {
public:
    /// Requires p prime with p = 1 (mod order).
    ModField(int order, uint64_t p);

    uint64_t p() const { return p_; }
    int order() const { return order_; }
    int lanes() const { return static_cast<int>(units_.size()); }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    // Values are held in Montgomery form a R mod p, R = 2^64; add, sub and mul
    // act on that form directly.
    uint64_t mul(uint64_t a, uint64_t b) const { return redc(static_cast<unsigned __int128>(a) * b); }
    uint64_t to_mont(uint64_t a) const { return mul(a % p_, r2_); }
    uint64_t from_mont(uint64_t a) const { return redc(a); }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    uint64_t reduce(const Rational& r) const;

    /// Values of x under the lanes() embeddings, written to out[0..lanes).
    void image(const CycNum& x, uint64_t* out) const;
    /// Power-basis coefficients mod p (length phi, plain form) of the element with the given lane values.
    std::vector<uint64_t> coefficients(const uint64_t* values) const;

private:
    uint64_t redc(unsigned __int128 t) const {
        uint64_t m = static_cast<uint64_t>(t) * pinv_;
        unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
        uint64_t r = static_cast<uint64_t>(u);
        return r >= p_ ? r - p_ : r;
    }

    int order_;
    uint64_t p_;
    uint64_t pinv_ = 0;  // -1/p mod 2^64
    uint64_t r2_ = 0;    // 2^128 mod p
    uint64_t one_ = 0;   // 2^64 mod p
    std::vector<int> units_;                 // k with gcd(k, order) = 1
    std::vector<std::vector<uint64_t>> ev_;  // ev_[s][e] = (w^{units_[s]})^e
    std::vector<std::vector<uint64_t>> inv_vandermonde_;
};

/// Smallest-height a/b with a = b*r (mod m), |a|, b <= sqrt(m/2); nullopt if none.
std::optional<Rational> rational_reconstruct(const mpz_class& r, const mpz_class& m);

/// Incremental reduced row echelon form over F_p^lanes, with combination tracking.
class ModEchelon {
public:
    ModEchelon(const ModField& f, int ncols);

    int rank() const { return static_cast<int>(rows_.size()); }
    /// x is dense: ncols blocks of lanes values. Returns the new label, or -1 when
    /// dependent, in which case combo (rank blocks of lanes values) gives
    /// x = sum_l combo[l] * input_l. Throws UnluckyPrime when lanes disagree.
    int insert(const std::vector<uint64_t>& x, std::vector<uint64_t>* combo, int preferred = -1);

private:
    struct Row {
        int pivot;
        std::vector<uint64_t> v;
        std::vector<uint64_t> t;
        std::vector<int> nz;  // blocks of v with a nonzero lane
    };
    // y -= f * row.v blockwise over the lanes
    void axpy_neg(uint64_t* y, const Row& row, const uint64_t* f) const;
    void refresh(Row& row) const;

    const ModField& f_;
    int ncols_;
    int lanes_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
};

}  // namespace nichols
