#include "nichols/modular.hpp"

#include <numeric>

namespace nichols {

namespace {

using u128 = unsigned __int128;

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = static_cast<uint64_t>(static_cast<u128>(r) * a % m);
        a = static_cast<uint64_t>(static_cast<u128>(a) * a % m);
        e >>= 1;
    }
    return r;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0) return n == q;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        uint64_t x = powmod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = static_cast<uint64_t>(static_cast<u128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeSequence::PrimeSequence(int n) : n_(static_cast<uint64_t>(n)) {
    if (n < 1) throw std::invalid_argument("PrimeSequence: order must be positive");
    const uint64_t top = (1ULL << 62);
    cur_ = (top - 1) / n_ * n_ + 1;
    if (cur_ >= top) cur_ -= n_;
}

uint64_t PrimeSequence::next() {
    while (cur_ > n_) {
        uint64_t c = cur_;
        cur_ -= n_;
        if (is_prime_u64(c)) return c;
    }
    throw std::runtime_error("PrimeSequence exhausted");
}

ModField::ModField(int order, uint64_t p) : order_(order), p_(p) {
    if ((p - 1) % static_cast<uint64_t>(order) != 0) throw std::invalid_argument("ModField: p != 1 mod order");
    if (p % 2 == 0 || p >= (1ULL << 62)) throw std::invalid_argument("ModField: need an odd p below 2^62");
    pinv_ = 1;
    for (int k = 0; k < 6; ++k) pinv_ *= 2 - p * pinv_;
    pinv_ = 0 - pinv_;
    one_ = static_cast<uint64_t>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<uint64_t>(static_cast<u128>(one_) * one_ % p);
    // a primitive order-th root of unity
    uint64_t w = 1;
    auto factors = prime_factors(static_cast<uint64_t>(order));
    for (uint64_t a = 2;; ++a) {
        w = powmod(a, (p - 1) / order, p);
        bool primitive = true;
        for (uint64_t l : factors)
            if (powmod(w, order / l, p) == 1) primitive = false;
        if (primitive) break;
    }
    for (int k = 1; k <= order; ++k)
        if (std::gcd(k, order) == 1) units_.push_back(k % order);
    const int phi = lanes();
    ev_.assign(phi, std::vector<uint64_t>(order));
    for (int s = 0; s < phi; ++s) {
        uint64_t ws = to_mont(powmod(w, static_cast<uint64_t>(units_[s]), p));
        uint64_t cur = one_;
        for (int e = 0; e < order; ++e) {
            ev_[s][e] = cur;
            cur = mul(cur, ws);
        }
    }
    // invert the Vandermonde matrix V[s][t] = ev_[s][t], t < phi
    std::vector<std::vector<uint64_t>> a(phi, std::vector<uint64_t>(2 * phi, 0));
    for (int s = 0; s < phi; ++s) {
        for (int t = 0; t < phi; ++t) a[s][t] = ev_[s][t];
        a[s][phi + s] = one_;
    }
    for (int c = 0; c < phi; ++c) {
        int r = c;
        while (a[r][c] == 0) ++r;
        std::swap(a[r], a[c]);
        uint64_t iv = inv(a[c][c]);
        for (auto& x : a[c]) x = mul(x, iv);
        for (int r2 = 0; r2 < phi; ++r2) {
            if (r2 == c || a[r2][c] == 0) continue;
            uint64_t f = a[r2][c];
            for (int k = 0; k < 2 * phi; ++k) a[r2][k] = sub(a[r2][k], mul(f, a[c][k]));
        }
    }
    inv_vandermonde_.assign(phi, std::vector<uint64_t>(phi));
    for (int t = 0; t < phi; ++t)
        for (int s = 0; s < phi; ++s) inv_vandermonde_[t][s] = a[t][phi + s];
}

uint64_t ModField::pow(uint64_t a, uint64_t e) const {
    uint64_t r = one_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t ModField::inv(uint64_t a) const {
    if (a == 0) throw UnluckyPrime("inverse of zero mod p");
    return pow(a, p_ - 2);
}

uint64_t ModField::reduce(const Rational& r) const {
    if (r.is_small()) {
        int64_t n = r.small_num();
        uint64_t nm = n >= 0 ? static_cast<uint64_t>(n) % p_ : (p_ - static_cast<uint64_t>(-n) % p_) % p_;
        uint64_t dm = static_cast<uint64_t>(r.small_den()) % p_;
        if (dm == 0) throw UnluckyPrime("prime divides a denominator");
        uint64_t v = to_mont(nm);
        return dm == 1 ? v : mul(v, inv(to_mont(dm)));
    }
    mpq_class q = r.to_mpq();
    mpz_class pm;
    mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
    mpz_class n = q.get_num() % pm;
    if (n < 0) n += pm;
    mpz_class d = q.get_den() % pm;
    if (d == 0) throw UnluckyPrime("prime divides a denominator");
    uint64_t nv = 0, dv = 0;
    mpz_export(&nv, nullptr, 1, sizeof(nv), 0, 0, n.get_mpz_t());
    mpz_export(&dv, nullptr, 1, sizeof(dv), 0, 0, d.get_mpz_t());
    return mul(to_mont(nv), inv(to_mont(dv)));
}

void ModField::image(const CycNum& x, uint64_t* out) const {
    if (x.order() != order_ && order_ % x.order() != 0) throw std::invalid_argument("ModField::image: order mismatch");
    const CycNum y = x.order() == order_ ? x : x.embed(order_);
    const auto& c = y.canonical();
    const int phi = lanes();
    for (int s = 0; s < phi; ++s) out[s] = 0;
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t].is_zero()) continue;
        uint64_t v = reduce(c[t]);
        for (int s = 0; s < phi; ++s) out[s] = add(out[s], mul(v, ev_[s][t]));
    }
}

std::vector<uint64_t> ModField::coefficients(const uint64_t* values) const {
    const int phi = lanes();
    std::vector<uint64_t> a(phi, 0);
    for (int t = 0; t < phi; ++t)
        for (int s = 0; s < phi; ++s) a[t] = add(a[t], mul(inv_vandermonde_[t][s], values[s]));
    for (auto& x : a) x = from_mont(x);
    return a;
}

std::optional<Rational> rational_reconstruct(const mpz_class& r, const mpz_class& m) {
    // extended Euclid on (m, r) stopped once the remainder drops below sqrt(m/2)
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = r % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(mpq_class(r1, t1));
}

ModEchelon::ModEchelon(const ModField& f, int ncols)
    : f_(f), ncols_(ncols), lanes_(f.lanes()), pivot_row_(ncols, -1) {}

void ModEchelon::axpy_neg(uint64_t* y, const Row& row, const uint64_t* f) const {
    const int L = lanes_;
    for (int c : row.nz) {
        const uint64_t* x = &row.v[static_cast<size_t>(c) * L];
        uint64_t* yc = y + static_cast<size_t>(c) * L;
        for (int s = 0; s < L; ++s) yc[s] = f_.sub(yc[s], f_.mul(f[s], x[s]));
    }
}

void ModEchelon::refresh(Row& row) const {
    row.nz.clear();
    for (int c = 0; c < ncols_; ++c)
        for (int s = 0; s < lanes_; ++s)
            if (row.v[static_cast<size_t>(c) * lanes_ + s]) {
                row.nz.push_back(c);
                break;
            }
}

int ModEchelon::insert(const std::vector<uint64_t>& x, std::vector<uint64_t>* combo, int preferred) {
    const int L = lanes_;
    const int rank = static_cast<int>(rows_.size());
    std::vector<uint64_t> d = x;
    std::vector<uint64_t> coeff(static_cast<size_t>(rank) * L, 0);
    // rows are fully reduced: each one is used with the entry of x at its pivot
    for (int r = 0; r < rank; ++r) {
        const Row& row = rows_[r];
        const uint64_t* fx = &x[static_cast<size_t>(row.pivot) * L];
        bool any = false;
        for (int s = 0; s < L; ++s) any |= fx[s] != 0;
        if (!any) continue;
        std::vector<uint64_t> f(fx, fx + L);
        axpy_neg(d.data(), row, f.data());
        for (int l = 0; l < static_cast<int>(row.t.size()) / L; ++l) {
            const uint64_t* t = &row.t[static_cast<size_t>(l) * L];
            uint64_t* cl = &coeff[static_cast<size_t>(l) * L];
            for (int s = 0; s < L; ++s)
                if (t[s]) cl[s] = f_.add(cl[s], f_.mul(f[s], t[s]));
        }
    }
    std::vector<bool> lane_nonzero(L, false);
    int pivot = -1;
    auto full = [&](int c) {
        for (int s = 0; s < L; ++s)
            if (d[static_cast<size_t>(c) * L + s] == 0) return false;
        return true;
    };
    for (int c = 0; c < ncols_; ++c)
        for (int s = 0; s < L; ++s)
            if (d[static_cast<size_t>(c) * L + s]) lane_nonzero[s] = true;
    bool some = false, all = true;
    for (int s = 0; s < L; ++s) {
        some |= lane_nonzero[s];
        all &= lane_nonzero[s];
    }
    if (!some) {
        if (combo) *combo = std::move(coeff);
        return -1;
    }
    if (!all) throw UnluckyPrime("lanes disagree on linear dependence");
    if (preferred >= 0 && full(preferred)) {
        pivot = preferred;
    } else {
        for (int c = 0; c < ncols_ && pivot < 0; ++c)
            if (full(c)) pivot = c;
    }
    if (pivot < 0) throw UnluckyPrime("no pivot that is a unit in every lane");

    const int label = rank;
    std::vector<uint64_t> inv(L);
    for (int s = 0; s < L; ++s) inv[s] = f_.inv(d[static_cast<size_t>(pivot) * L + s]);
    Row row;
    row.pivot = pivot;
    row.v.resize(d.size());
    for (int c = 0; c < ncols_; ++c)
        for (int s = 0; s < L; ++s)
            row.v[static_cast<size_t>(c) * L + s] = f_.mul(d[static_cast<size_t>(c) * L + s], inv[s]);
    // x - sum coeff * inputs = residual, so the new row is (e_label - coeff) / pivot
    row.t.assign(static_cast<size_t>(label + 1) * L, 0);
    for (int l = 0; l < label; ++l)
        for (int s = 0; s < L; ++s)
            row.t[static_cast<size_t>(l) * L + s] = f_.mul(f_.sub(0, coeff[static_cast<size_t>(l) * L + s]), inv[s]);
    for (int s = 0; s < L; ++s) row.t[static_cast<size_t>(label) * L + s] = inv[s];
    refresh(row);
    for (auto& other : rows_) {
        const uint64_t* fo = &other.v[static_cast<size_t>(pivot) * L];
        bool any = false;
        for (int s = 0; s < L; ++s) any |= fo[s] != 0;
        if (!any) continue;
        std::vector<uint64_t> f(fo, fo + L);
        axpy_neg(other.v.data(), row, f.data());
        refresh(other);
        other.t.resize(row.t.size(), 0);
        for (size_t k = 0; k < row.t.size(); ++k) {
            uint64_t t = row.t[k];
            if (t) other.t[k] = f_.sub(other.t[k], f_.mul(f[k % L], t));
        }
    }
    pivot_row_[pivot] = label;
    rows_.push_back(std::move(row));
    return label;
}

}  // namespace nichols
