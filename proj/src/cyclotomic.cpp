#include "nichols/cyclotomic.hpp"

#include <array>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace nichols {

struct CyclotomicContext {
    int n = 1;
    int phi = 1;
    std::vector<int64_t> poly;                 // Phi_n, monic, degree phi
    std::vector<std::vector<int64_t>> powers;  // z^k reduced, k in [0, n)
};

namespace {

int64_t mod(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

const CyclotomicContext* context(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicContext>> cache;
    if (n < 1) throw std::domain_error("cyclotomic order must be positive");
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();

    auto ctx = std::make_unique<CyclotomicContext>();
    ctx->n = n;
    ctx->poly = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
    const int phi = ctx->phi;
    ctx->powers.assign(n, std::vector<int64_t>(phi, 0));
    std::vector<int64_t> cur(phi, 0);
    cur[0] = 1;
    for (int k = 0; k < n; ++k) {
        ctx->powers[k] = cur;
        // multiply by z and reduce the overflow coefficient with the monic relation
        int64_t top = cur[phi - 1];
        for (int j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        for (int j = 0; j < phi; ++j) cur[j] -= top * ctx->poly[j];
    }
    auto* raw = ctx.get();
    cache.emplace(n, std::move(ctx));
    return raw;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<int64_t> cyclotomic_polynomial(int n) {
    // x^n - 1 divided by Phi_d for every proper divisor d
    std::vector<int64_t> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<int64_t> div = cyclotomic_polynomial(d);
        int dn = static_cast<int>(num.size()) - 1;
        int dd = static_cast<int>(div.size()) - 1;
        std::vector<int64_t> quot(dn - dd + 1, 0);
        for (int k = dn - dd; k >= 0; --k) {
            int64_t coef = num[k + dd];  // divisor is monic
            quot[k] = coef;
            for (int j = 0; j <= dd; ++j) num[k + j] -= coef * div[j];
        }
        num = std::move(quot);
    }
    return num;
}

CycNum::CycNum() : CycNum(1, context(1)) {}

CycNum::CycNum(int order, const CyclotomicContext* ctx) : order_(order), ctx_(ctx), c_(ctx->phi) {}

CycNum CycNum::zero(int order) { return CycNum(order, context(order)); }

CycNum CycNum::one(int order) { return integer(order, 1); }

CycNum CycNum::integer(int order, int64_t k) { return rational(order, Rational(k)); }

CycNum CycNum::rational(int order, const Rational& r) {
    CycNum x(order, context(order));
    x.c_[0] = r;
    return x;
}

CycNum CycNum::root(int order, int64_t exponent) {
    const auto* ctx = context(order);
    CycNum x(order, ctx);
    const auto& p = ctx->powers[mod(exponent, order)];
    for (int j = 0; j < ctx->phi; ++j) x.c_[j] = Rational(p[j]);
    return x;
}

CycNum CycNum::from_coeffs(int order, const std::vector<Rational>& coeffs) {
    const auto* ctx = context(order);
    CycNum x(order, ctx);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        const auto& p = ctx->powers[k % order];
        for (int j = 0; j < ctx->phi; ++j)
            if (p[j] != 0) x.c_[j] += coeffs[k].times(p[j]);
    }
    return x;
}

std::vector<Rational> CycNum::coeffs() const {
    std::vector<Rational> out(order_);
    for (size_t j = 0; j < c_.size(); ++j) out[j] = c_[j];
    return out;
}

bool CycNum::is_zero() const {
    for (const auto& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool CycNum::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

void CycNum::align(CycNum& a, CycNum& b) {
    if (a.order_ == b.order_) return;
    int m = std::lcm(a.order_, b.order_);
    if (a.order_ != m) a = a.embed(m);
    if (b.order_ != m) b = b.embed(m);
}

CycNum CycNum::operator-() const {
    CycNum r(order_, ctx_);
    for (size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
    return r;
}

CycNum& CycNum::operator+=(const CycNum& b) {
    if (order_ != b.order_) return *this = *this + b;
    for (size_t j = 0; j < c_.size(); ++j)
        if (!b.c_[j].is_zero()) c_[j] += b.c_[j];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
    if (order_ != b.order_) return *this = *this - b;
    for (size_t j = 0; j < c_.size(); ++j)
        if (!b.c_[j].is_zero()) c_[j] -= b.c_[j];
    return *this;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        CycNum x = a, y = b;
        CycNum::align(x, y);
        return x + y;
    }
    CycNum r = a;
    r += b;
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        CycNum x = a, y = b;
        CycNum::align(x, y);
        return x - y;
    }
    CycNum r = a;
    r -= b;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        CycNum x = a, y = b;
        CycNum::align(x, y);
        return x * y;
    }
    CycNum r(a.order_, a.ctx_);
    r.add_mul(a, b);
    return r;
}

void CycNum::add_mul(const CycNum& b, const CycNum& c) {
    if (b.order_ != order_ || c.order_ != order_) {
        *this = *this + b * c;
        return;
    }
    const int phi = ctx_->phi;
    const int n = order_;
    // rational factors hit the fast path: a scalar times a vector
    if (b.is_rational() || c.is_rational()) {
        const CycNum& s = b.is_rational() ? b : c;
        const CycNum& v = b.is_rational() ? c : b;
        if (s.c_[0].is_zero()) return;
        for (int j = 0; j < phi; ++j)
            if (!v.c_[j].is_zero()) c_[j].add_mul(s.c_[0], v.c_[j]);
        return;
    }
    std::array<Rational, 48> local;
    std::vector<Rational> spill;
    Rational* prod = local.data();
    if (2 * phi - 1 > static_cast<int>(local.size())) {
        spill.resize(2 * phi - 1);
        prod = spill.data();
    }
    for (int i = 0; i < phi; ++i) {
        if (b.c_[i].is_zero()) continue;
        for (int j = 0; j < phi; ++j)
            if (!c.c_[j].is_zero()) prod[i + j].add_mul(b.c_[i], c.c_[j]);
    }
    for (int k = 0; k < phi; ++k)
        if (!prod[k].is_zero()) c_[k] += prod[k];
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& p = ctx_->powers[k % n];
        for (int j = 0; j < phi; ++j)
            if (p[j] != 0) c_[j] += prod[k].times(p[j]);
    }
}

CycNum CycNum::times_root(int64_t e) const {
    e = mod(e, order_);
    if (e == 0) return *this;
    CycNum r(order_, ctx_);
    const int phi = ctx_->phi;
    for (int j = 0; j < phi; ++j) {
        if (c_[j].is_zero()) continue;
        int64_t k = (j + e) % order_;
        if (k < phi) {
            r.c_[k] += c_[j];
            continue;
        }
        const auto& p = ctx_->powers[k];
        for (int t = 0; t < phi; ++t)
            if (p[t] != 0) r.c_[t] += c_[j].times(p[t]);
    }
    return r;
}

CycNum CycNum::times(const Rational& s) const {
    CycNum r(order_, ctx_);
    if (s.is_zero()) return r;
    for (size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) r.c_[j] = c_[j] * s;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        CycNum x = a, y = b;
        CycNum::align(x, y);
        return x == y;
    }
    return a.c_ == b.c_;
}

CycNum CycNum::conjugate(int64_t k) const {
    k = mod(k, order_);
    if (std::gcd(k, static_cast<int64_t>(order_)) != 1) throw std::domain_error("conjugate: exponent not a unit");
    CycNum r(order_, ctx_);
    const int phi = ctx_->phi;
    for (int j = 0; j < phi; ++j) {
        if (c_[j].is_zero()) continue;
        const auto& p = ctx_->powers[(j * k) % order_];
        for (int t = 0; t < phi; ++t)
            if (p[t] != 0) r.c_[t] += c_[j].times(p[t]);
    }
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in cyclotomic field");
    if (is_rational()) return rational(order_, Rational(1) / c_[0]);
    // the product of all other Galois conjugates is the adjugate of *this
    CycNum adj = one(order_);
    for (int k = 2; k < order_; ++k)
        if (std::gcd(k, order_) == 1) adj *= conjugate(k);
    CycNum norm = *this * adj;
    if (!norm.is_rational()) throw std::logic_error("cyclotomic norm is not rational");
    return adj.times(Rational(1) / norm.c_[0]);
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::pow(int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    CycNum result = one(order_);
    CycNum base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

CycNum CycNum::embed(int new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0) throw std::domain_error("embed: target order is not a multiple");
    const int step = new_order / order_;
    const auto* ctx = context(new_order);
    CycNum r(new_order, ctx);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        const auto& p = ctx->powers[(j * step) % new_order];
        for (int t = 0; t < ctx->phi; ++t)
            if (p[t] != 0) r.c_[t] += c_[j].times(p[t]);
    }
    return r;
}

std::string CycNum::str() const {
    std::string out;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        std::string coef = c_[j].str();
        bool neg = c_[j].sign() < 0;
        if (neg) coef = coef.substr(1);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (j == 0) {
            out += coef;
        } else {
            if (coef != "1") out += coef + "*";
            out += j == 1 ? "z" : "z^" + std::to_string(j);
        }
    }
    return out.empty() ? "0" : out;
}

RootOfUnity::RootOfUnity(int n, int64_t e) : order(n), exponent(mod(e, n)) {
    if (n < 1) throw std::domain_error("root of unity order must be positive");
}

int RootOfUnity::multiplicative_order() const {
    return order / static_cast<int>(std::gcd(static_cast<int64_t>(order), exponent));
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    if (a.order == b.order) return {a.order, a.exponent + b.exponent};
    int m = std::lcm(a.order, b.order);
    return {m, a.exponent * (m / a.order) + b.exponent * (m / b.order)};
}

std::optional<RootOfUnity> RootOfUnity::from_cyc(const CycNum& q) {
    for (int e = 0; e < q.order(); ++e)
        if (CycNum::root(q.order(), e) == q) return RootOfUnity(q.order(), e);
    return std::nullopt;
}

std::optional<int> mult_order(const CycNum& q) {
    if (q.is_zero()) throw std::domain_error("mult_order of zero");
    const int n = q.order();
    if (auto r = RootOfUnity::from_cyc(q)) return r->multiplicative_order();
    // for odd n the field also contains -zeta^e, of order 2n/gcd(n,e)
    if (n % 2 == 1) {
        if (auto r = RootOfUnity::from_cyc(-q)) return 2 * r->multiplicative_order();
    }
    // the roots of unity in Q(zeta_n) all have order dividing lcm(2, n)
    CycNum p = q;
    for (int k = 1; k <= 2 * n; ++k) {
        if (p.is_one()) return k;
        p *= q;
    }
    return std::nullopt;
}

CycNum q_number(int n, const CycNum& q) {
    CycNum sum = CycNum::zero(q.order());
    CycNum p = CycNum::one(q.order());
    for (int k = 0; k < n; ++k) {
        sum += p;
        p *= q;
    }
    return sum;
}

CycNum q_factorial(int n, const CycNum& q) {
    CycNum f = CycNum::one(q.order());
    for (int k = 1; k <= n; ++k) f *= q_number(k, q);
    return f;
}

CycNum q_binomial(int n, int k, const CycNum& q) {
    if (k < 0 || k > n) return CycNum::zero(q.order());
    CycNum den = q_factorial(k, q) * q_factorial(n - k, q);
    if (!den.is_zero()) return q_factorial(n, q) / den;
    // q-Pascal: binom(m, j) = binom(m-1, j-1) + q^j binom(m-1, j)
    std::vector<CycNum> row(n + 1, CycNum::zero(q.order()));
    row[0] = CycNum::one(q.order());
    for (int m = 1; m <= n; ++m) {
        for (int j = m; j >= 1; --j) row[j] = row[j - 1] + q.pow(j) * row[j];
    }
    return row[k];
}

}  // namespace nichols
