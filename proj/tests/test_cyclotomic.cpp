#include "doctest.h"
#include "nichols/cyclotomic.hpp"

#include <random>

using namespace nichols;

namespace {

CycNum random_cyc(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Rational> c(n);
    for (auto& x : c) x = Rational(d(rng), 1 + (rng() % 3));
    return CycNum::from_coeffs(n, c);
}

// Gaussian binomial as an integer polynomial in q: prod (1 - q^{n-i}) / (1 - q^{i+1}), i < k
std::vector<int64_t> gauss_poly(int n, int k) {
    std::vector<int64_t> p{1};
    auto mul = [](const std::vector<int64_t>& a, int e) {
        std::vector<int64_t> r(a.size() + e, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] += a[i];
            r[i + e] -= a[i];
        }
        return r;
    };
    auto div = [](std::vector<int64_t> a, int e) {
        // exact division by 1 - q^e
        std::vector<int64_t> r(a.size() - e, 0);
        for (size_t i = 0; i < r.size(); ++i) {
            r[i] = a[i];
            a[i + e] += a[i];
        }
        return r;
    };
    for (int i = 0; i < k; ++i) p = mul(p, n - i);
    for (int i = 0; i < k; ++i) p = div(p, i + 1);
    return p;
}

}  // namespace

TEST_CASE("rational arithmetic and overflow promotion") {
    Rational a(INT64_MAX);
    Rational b = a * a;
    CHECK(b.str() == "85070591730234615847396907784232501249");
    CHECK(b / a == a);
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK((Rational(1, 3) + Rational(2, 3)).is_one());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("cyclotomic basics") {
    CHECK(CycNum::root(4, 2) == CycNum::integer(4, -1));
    CHECK((CycNum::one(3) + CycNum::root(3, 1) + CycNum::root(3, 2)).is_zero());
    CHECK(CycNum::root(6, 1).inverse() == CycNum::root(6, 5));
    CHECK(*mult_order(CycNum::root(12, 8)) == 3);
    CHECK(*mult_order(CycNum::one(7)) == 1);
    CHECK(*mult_order(CycNum::root(5, 1)) == 5);
    CHECK(*mult_order(-CycNum::root(5, 1)) == 10);
    CHECK(!mult_order(CycNum::integer(3, 2)));
    CHECK_THROWS(mult_order(CycNum::zero(3)));
    CHECK_THROWS(CycNum::zero(5).inverse());
    CHECK(q_number(3, CycNum::root(3, 1)).is_zero());
    CHECK(q_number(2, CycNum::integer(1, -1)).is_zero());
    CycNum q = CycNum::root(7, 3);
    CHECK(q_binomial(2, 1, q) == CycNum::one(7) + q);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<int64_t>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 40; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) - 1 == euler_phi(n));
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(17);
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 24}) {
        for (int t = 0; t < 10; ++t) {
            CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK((a * b - b * a).is_zero());
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(a.times_root(5) == a * CycNum::root(n, 5));
        }
        for (int k = -3 * n; k < 3 * n; ++k) CHECK((CycNum::root(n, k) - CycNum::root(n, ((k % n) + n) % n)).is_zero());
    }
}

TEST_CASE("cross-order arithmetic embeds into the lcm") {
    CycNum a = CycNum::root(4, 1);
    CycNum b = CycNum::root(6, 1);
    CycNum p = a * b;
    CHECK(p.order() == 12);
    CHECK(p == CycNum::root(12, 5));
    CHECK(CycNum::root(3, 1).embed(6) == CycNum::root(6, 2));
    CHECK(CycNum::root(3, 1) == CycNum::root(6, 2));
}

TEST_CASE("root of unity round trip") {
    for (int n = 1; n <= 16; ++n)
        for (int e = 0; e < n; ++e) {
            RootOfUnity r(n, e);
            auto back = RootOfUnity::from_cyc(r.value());
            REQUIRE(back);
            CHECK(back->exponent == e);
            CHECK(r.multiplicative_order() == *mult_order(r.value()));
            CHECK(r.value().pow(r.multiplicative_order()).is_one());
        }
}

TEST_CASE("q-binomials match the polynomial expansion") {
    for (int m = 1; m <= 8; ++m)
        for (int e = 0; e < m; ++e) {
            CycNum q = CycNum::root(m, e);
            for (int n = 0; n <= 8; ++n)
                for (int k = 0; k <= n; ++k) {
                    auto p = gauss_poly(n, k);
                    CycNum expect = CycNum::zero(m);
                    for (size_t i = 0; i < p.size(); ++i) expect += CycNum::integer(m, p[i]) * q.pow(i);
                    CHECK(q_binomial(n, k, q) == expect);
                }
        }
}
