#include "doctest.h"
#include "nichols/linalg.hpp"
#include "nichols/modular.hpp"

#include <map>
#include <random>

using namespace nichols;

TEST_CASE("primes congruent to one") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000000007));
    CHECK(!is_prime_u64(1000000007ULL * 3));
    CHECK(!is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    PrimeSequence ps(10);
    uint64_t prev = UINT64_MAX;
    for (int k = 0; k < 3; ++k) {
        uint64_t p = ps.next();
        CHECK(p % 10 == 1);
        CHECK(p < (1ULL << 62));
        CHECK(p < prev);
        CHECK(is_prime_u64(p));
        prev = p;
    }
}

TEST_CASE("lane images are ring maps and invert to coefficients") {
    std::mt19937 rng(3);
    for (int N : {1, 2, 5, 6, 10, 12}) {
        ModField F(N, PrimeSequence(N).next());
        const int L = F.lanes();
        CHECK(L == euler_phi(N));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> a(N), b(N);
            for (int k = 0; k < N; ++k) {
                a[k] = Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 3));
                b[k] = Rational(static_cast<int>(rng() % 11) - 5);
            }
            CycNum x = CycNum::from_coeffs(N, a), y = CycNum::from_coeffs(N, b);
            std::vector<uint64_t> ix(L), iy(L), ixy(L), is(L);
            F.image(x, ix.data());
            F.image(y, iy.data());
            F.image(x * y, ixy.data());
            F.image(x + y, is.data());
            for (int s = 0; s < L; ++s) {
                CHECK(F.mul(ix[s], iy[s]) == ixy[s]);
                CHECK(F.add(ix[s], iy[s]) == is[s]);
            }
            // back to integer power-basis coefficients
            auto cy = F.coefficients(iy.data());
            for (int t = 0; t < L; ++t) {
                const Rational& r = y.canonical()[t];
                uint64_t expect = r.sign() >= 0 ? static_cast<uint64_t>(r.small_num()) : F.p() - static_cast<uint64_t>(-r.small_num());
                CHECK(cy[t] == expect % F.p());
            }
        }
    }
}

TEST_CASE("rational reconstruction") {
    mpz_class m = 1000003;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 7}, {-12, 5}, {0, 1}, {1, 1}, {-1, 300}}) {
        mpz_class dinv;
        mpz_class dz = d;
        mpz_invert(dinv.get_mpz_t(), dz.get_mpz_t(), m.get_mpz_t());
        mpz_class r = (mpz_class(n) * dinv) % m;
        if (r < 0) r += m;
        auto q = rational_reconstruct(r, m);
        REQUIRE(q);
        CHECK(*q == Rational(n, d));
    }
    // heights beyond sqrt(m/2) cannot be recovered
    mpz_class dinv, dz = 99999;
    mpz_invert(dinv.get_mpz_t(), dz.get_mpz_t(), m.get_mpz_t());
    mpz_class r = (mpz_class(100000) * dinv) % m;
    auto q = rational_reconstruct(r, m);
    CHECK((!q || !(*q == Rational(100000, 99999))));
}

TEST_CASE("modular echelon agrees with exact elimination") {
    std::mt19937 rng(9);
    const int N = 6;
    ModField F(N, PrimeSequence(N).next());
    const int L = F.lanes();
    for (int trial = 0; trial < 5; ++trial) {
        const int ncols = 7;
        std::vector<SparseVec> rows;
        for (int r = 0; r < 10; ++r) {
            SparseVec v;
            if (r >= 4 && rng() % 2) {
                // a combination of two earlier rows
                std::map<int, CycNum> m;
                for (int k = 0; k < 2; ++k) {
                    CycNum c = CycNum::root(N, rng() % N);
                    for (const auto& [col, x] : rows[rng() % r]) {
                        auto [it, fresh] = m.emplace(col, c * x);
                        if (!fresh) it->second += c * x;
                    }
                }
                for (auto& [col, x] : m)
                    if (!x.is_zero()) v.emplace_back(col, x);
            } else {
                for (int c = 0; c < ncols; ++c)
                    if (rng() % 3 == 0) v.emplace_back(c, CycNum::root(N, rng() % N) + CycNum::integer(N, rng() % 3));
                std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
            }
            rows.push_back(v);
        }
        Echelon exact(ncols, N, true);
        ModEchelon mod(F, ncols);
        for (const auto& v : rows) {
            std::vector<uint64_t> x(static_cast<size_t>(ncols) * L, 0);
            for (const auto& [c, val] : v) F.image(val, &x[static_cast<size_t>(c) * L]);
            SparseVec combo;
            std::vector<uint64_t> mcombo;
            int a = exact.insert(v, &combo);
            int b = mod.insert(x, &mcombo);
            CHECK(a == b);
            if (a < 0) {
                for (const auto& [l, c] : combo) {
                    std::vector<uint64_t> img(L);
                    F.image(c, img.data());
                    for (int s = 0; s < L; ++s) CHECK(mcombo[static_cast<size_t>(l) * L + s] == img[s]);
                }
            }
        }
    }
}
