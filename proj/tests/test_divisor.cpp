#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include <qlambert/qlambert.hpp>

using qlambert::Int;
using qlambert::SigmaTable;

TEST_CASE("sigma_naive examples") {
    REQUIRE(qlambert::sigma_naive(1, 1) == 1);
    REQUIRE(qlambert::sigma_naive(1, 6) == 12);
    REQUIRE(qlambert::sigma_naive(2, 4) == 21);
    REQUIRE(qlambert::sigma_naive(0, 12) == 6);
    REQUIRE(qlambert::sigma_naive(3, 2) == 9);
    REQUIRE_THROWS_AS(qlambert::sigma_naive(1, 0), qlambert::domain_error);
}

TEST_CASE("sigma_sieve examples") {
    const SigmaTable t1 = qlambert::sigma_sieve(1, 6);
    REQUIRE(t1.values == std::vector<Int>{1, 3, 4, 7, 6, 12});

    const SigmaTable t0 = qlambert::sigma_sieve(0, 4);
    REQUIRE(t0.values == std::vector<Int>{1, 2, 2, 3});

    for (unsigned k = 0; k <= 4; ++k)
        REQUIRE(qlambert::sigma_sieve(k, 3).at(1) == 1);

    REQUIRE_THROWS_AS(qlambert::sigma_sieve(1, 0), qlambert::domain_error);
}

TEST_CASE("SigmaTable bounds") {
    const SigmaTable t = qlambert::sigma_sieve(1, 10);
    REQUIRE(t.at(10) == 18);
    REQUIRE_THROWS_AS(t.at(0), qlambert::domain_error);
    REQUIRE_THROWS_AS(t.at(11), qlambert::domain_error);
}

TEST_CASE("sieve agrees with trial division up to 10^4") {
    for (unsigned k = 0; k <= 3; ++k) {
        const SigmaTable t = qlambert::sigma_sieve(k, 10000);
        for (std::size_t n = 1; n <= 10000; ++n)
            REQUIRE(t.values[n - 1] == qlambert::sigma_naive(k, n));
    }
}

TEST_CASE("table invariants: primes and composites") {
    for (unsigned k = 0; k <= 3; ++k) {
        const SigmaTable t = qlambert::sigma_sieve(k, 200);
        for (std::size_t n = 2; n <= 200; ++n) {
            bool prime = true;
            for (std::size_t d = 2; d * d <= n; ++d)
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            const Int floor_val = 1 + qlambert::int_pow(Int(n), k);
            if (prime)
                REQUIRE(t.at(n) == floor_val);
            else
                REQUIRE(t.at(n) >= floor_val);
        }
    }
}

TEST_CASE("multiplicativity on coprime pairs up to 2000") {
    for (unsigned k = 0; k <= 3; ++k) {
        const SigmaTable t = qlambert::sigma_sieve(k, 2000);
        for (std::size_t m = 2; m * 2 <= 2000; ++m)
            for (std::size_t n = m + 1; m * n <= 2000; ++n) {
                if (std::gcd(m, n) != 1)
                    continue;
                REQUIRE(t.at(m * n) == t.at(m) * t.at(n));
            }
    }
}

TEST_CASE("sigma_gf layout") {
    const qlambert::Series s = qlambert::sigma_gf(1, 2, 7);
    REQUIRE(s.coeffs() == std::vector<Int>{0, 0, 1, 0, 3, 0, 4});

    const qlambert::Series t = qlambert::sigma_gf(1, 1, 4);
    REQUIRE(t.coeffs() == std::vector<Int>{0, 1, 3, 4});

    for (unsigned k = 0; k <= 3; ++k)
        REQUIRE(qlambert::sigma_gf(k, 2, 16).coeff(0) == 0);

    // order too small for any tabulated value: zero series, not an error
    REQUIRE(qlambert::sigma_gf(1, 4, 3) == qlambert::Series::zero(3));

    REQUIRE_THROWS_AS(qlambert::sigma_gf(1, 0, 8), qlambert::domain_error);
}

TEST_CASE("sigma_gf on stride 1 equals the linear-weight Lambert sum") {
    const qlambert::Series lhs = qlambert::sigma_gf(1, 1, 512);
    const qlambert::Series rhs = qlambert::lambert_generic(
        [](std::size_t n) { return Int(n); }, 512);
    REQUIRE(lhs == rhs);
}
