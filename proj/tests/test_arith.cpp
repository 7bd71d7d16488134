#include "divser/arith.hpp"

#include "support/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>

using namespace divser;

TEST_CASE("factorize canonical examples", "[arith]") {
    CHECK(factorize(1).factors.empty());

    Factorization f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<BigInt, unsigned>{2, 2});
    CHECK(f12.factors[1] == std::pair<BigInt, unsigned>{3, 1});

    Factorization f8128 = factorize(8128);
    REQUIRE(f8128.factors.size() == 2);
    CHECK(f8128.factors[0] == std::pair<BigInt, unsigned>{2, 6});
    CHECK(f8128.factors[1] == std::pair<BigInt, unsigned>{127, 1});
}

TEST_CASE("factorize rejects nonpositive input", "[arith]") {
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-5), std::invalid_argument);
    CHECK_THROWS_AS(sigma(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(central_binomial(0), std::invalid_argument);
}

TEST_CASE("factorize agrees with trial division", "[arith]") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        auto expected = oracles::factorize_trial(n);
        Factorization got = factorize(BigInt(static_cast<unsigned long>(n)));
        REQUIRE(got.factors.size() == expected.size());
        for (size_t i = 0; i < expected.size(); ++i) {
            CHECK(got.factors[i].first == expected[i].first);
            CHECK(got.factors[i].second == expected[i].second);
        }
    }
    // a few larger spot checks through the rho path
    for (std::uint64_t n : {999999937ull * 2, 1000003ull * 1000033ull, 2147483647ull}) {
        BigInt bn(static_cast<unsigned long>(n));
        Factorization f = factorize(bn);
        CHECK(reassemble(f) == bn);
        for (const auto& [p, e] : f.factors) {
            CHECK(detail::is_prime_u64(mpz_get_ui(p.get_mpz_t())));
        }
    }
}

TEST_CASE("factorize round-trip up to 1e5", "[arith]") {
    for (unsigned long n = 1; n <= 100000; ++n) {
        Factorization f = factorize(n);
        CHECK(reassemble(f) == n);
        for (const auto& [p, e] : f.factors) {
            CHECK(detail::is_prime_u64(mpz_get_ui(p.get_mpz_t())));
        }
    }
}

TEST_CASE("sigma examples", "[arith]") {
    CHECK(sigma(1, 1) == 1);
    CHECK(sigma(1, 6) == 12);
    CHECK(sigma(2, 4) == 21);
    CHECK(sigma(0, 12) == 6);
}

TEST_CASE("sigma product formula equals divisor enumeration", "[arith]") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        Factorization f = factorize(n);
        for (unsigned s = 0; s <= 3; ++s) {
            CHECK(sigma_from_factorization(s, f) == oracles::sigma_brute(s, n));
        }
    }
}

TEST_CASE("totient and mobius examples", "[arith]") {
    CHECK(totient(1) == 1);
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(totient(12) == 4);
    CHECK(totient(12) == oracles::totient_brute(12));
}

TEST_CASE("multiplicativity on coprime pairs", "[arith]") {
    for (std::uint64_t m = 1; m <= 100; ++m) {
        for (std::uint64_t n = m; m * n <= 10000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            BigInt bm(static_cast<unsigned long>(m)), bn(static_cast<unsigned long>(n));
            BigInt bmn(static_cast<unsigned long>(m * n));
            for (unsigned s = 0; s <= 3; ++s) {
                CHECK(sigma(s, bmn) == sigma(s, bm) * sigma(s, bn));
            }
            CHECK(totient(bmn) == totient(bm) * totient(bn));
            CHECK(mobius(bmn) == mobius(bm) * mobius(bn));
        }
    }
}

TEST_CASE("totient and mobius divisor sums", "[arith]") {
    SieveTables t = build_sieve(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        std::int64_t phi_sum = 0;
        int mu_sum = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            phi_sum += t.phi[d];
            mu_sum += t.mu[d];
            if (d != n / d) {
                phi_sum += t.phi[n / d];
                mu_sum += t.mu[n / d];
            }
        }
        CHECK(phi_sum == static_cast<std::int64_t>(n));
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("sieve tables match the single-shot functions", "[arith]") {
    SieveTables t = build_sieve(3000);
    for (unsigned long n = 1; n <= 3000; ++n) {
        CHECK(t.phi[n] == totient(n));
        CHECK(t.mu[n] == mobius(n));
    }
}

TEST_CASE("central binomial examples", "[arith]") {
    CHECK(central_binomial(1) == 2);
    CHECK(central_binomial(2) == 6);
    CHECK(central_binomial(5) == 252);
    for (unsigned long n = 1; n <= 60; ++n) {
        CHECK(central_binomial(n) == oracles::binomial_factorial(2 * n, n));
    }
}

TEST_CASE("divisors examples and count", "[arith]") {
    CHECK(divisors(1) == std::vector<BigInt>{1});
    CHECK(divisors(6) == std::vector<BigInt>{1, 2, 3, 6});
    CHECK(divisors(16) == std::vector<BigInt>{1, 2, 4, 8, 16});
    for (std::uint64_t n = 1; n <= 500; ++n) {
        auto divs = divisors(BigInt(static_cast<unsigned long>(n)));
        auto brute = oracles::divisors_brute(n);
        REQUIRE(divs.size() == brute.size());
        CHECK(divs.size() == mpz_get_ui(sigma(0, n).get_mpz_t()));
        for (size_t i = 0; i < divs.size(); ++i) CHECK(divs[i] == brute[i]);
    }
}

TEST_CASE("sigma table matches sigma", "[arith]") {
    auto table = sigma_table(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CHECK(BigInt(static_cast<unsigned long>(table[n])) == sigma(1, n));
    }
}
