#include <doctest.h>

#include "dtup/arith.hpp"
#include "oracles.hpp"

using namespace dtup;

TEST_CASE("ikroot examples")
{
    CHECK(ikroot(961, 2) == 31);
    CHECK(ikroot(1, 7) == 1);
    CHECK(ikroot(u128{1000000000000000000ull}, 3) == 1000000);
    CHECK(ikroot(0, 3) == 0);
    const u128 big = ~u128{0};
    const u128 r = ikroot(big, 2);
    CHECK(r == (u128{1} << 64) - 1);
}

TEST_CASE("ikroot brackets the real root for m <= 1e6, k in 2..20")
{
    for (unsigned k = 2; k <= 20; ++k) {
        for (u128 m = 0; m <= 1000000; ++m) {
            const u128 r = ikroot(m, k);
            const BigInt lo = boost::multiprecision::pow(BigInt(to_string(r)), k);
            const BigInt hi = boost::multiprecision::pow(BigInt(to_string(r + 1)), k);
            if (!(lo <= BigInt(to_string(m)) && BigInt(to_string(m)) < hi)) {
                FAIL("ikroot(" << to_string(m) << ", " << k << ") = " << to_string(r));
            }
        }
    }
}

TEST_CASE("ikroot near 128-bit powers")
{
    for (unsigned k = 2; k <= 40; ++k) {
        for (u128 x : {u128{2}, u128{3}, u128{10}, u128{255}, u128{1} << 20}) {
            const auto p = checked_pow(x, k);
            if (!p) continue;
            CHECK(ikroot(*p, k) == x);
            CHECK(ikroot(*p - 1, k) == x - 1);
            if (*p != ~u128{0}) CHECK(ikroot(*p + 1, k) == x);
        }
    }
}

TEST_CASE("is_kth_power matches ikroot")
{
    CHECK(is_kth_power(25, 2) == std::optional<u128>(5));
    CHECK_FALSE(is_kth_power(26, 2));
    CHECK_FALSE(is_kth_power(0, 3));
    for (unsigned k = 2; k <= 7; ++k) {
        for (u128 m = 0; m <= 20000; ++m) {
            const auto r = ikroot(m, k);
            const bool exact = m >= 1 && *checked_pow(r, k) == m;
            CHECK(is_kth_power(m, k).has_value() == exact);
        }
    }
    const BigInt huge = boost::multiprecision::pow(BigInt(1234567891), 5);
    CHECK(is_kth_power(huge, 5) == std::optional<BigInt>(BigInt(1234567891)));
    CHECK_FALSE(is_kth_power(huge + 1, 5));
}

TEST_CASE("smallest_power_exponent agrees with an exponent scan for m <= 1e5")
{
    CHECK(smallest_power_exponent(64, ExponentCap(10)) == std::optional<unsigned>(2));
    CHECK(smallest_power_exponent(27, ExponentCap(10)) == std::optional<unsigned>(3));
    CHECK_FALSE(smallest_power_exponent(12, ExponentCap(10)));
    const unsigned cap = 17;
    // Smallest prime e <= cap with m = x^e, by repeated multiplication.
    std::vector<unsigned> expected(100001, 0);
    for (unsigned e = cap; e >= 2; --e) {
        if (!oracle::is_prime_by_trial(e)) continue;
        for (std::uint64_t x = 1;; ++x) {
            std::uint64_t v = 1;
            bool over = false;
            for (unsigned i = 0; i < e && !over; ++i) {
                v *= x;
                over = v > 100000;
            }
            if (over) break;
            expected[v] = e;
        }
    }
    for (u128 m = 1; m <= 100000; ++m) {
        const auto got = smallest_power_exponent(m, ExponentCap(cap));
        const unsigned want = expected[static_cast<std::size_t>(m)];
        if (got.value_or(0) != want) FAIL("m = " << to_string(m));
    }
}

TEST_CASE("primes_up_to and is_prime against trial division")
{
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    const auto p31 = primes_up_to(31);
    CHECK(p31.size() == 11);
    CHECK(p31.back() == 31);
    const auto ps = primes_up_to(20000);
    std::vector<std::uint64_t> trial;
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        if (oracle::is_prime_by_trial(n)) trial.push_back(n);
        CHECK(is_prime(n) == oracle::is_prime_by_trial(n));
    }
    CHECK(ps == trial);
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(18446744073709551555ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("primes_in_ap is a residue filter of primes_up_to")
{
    CHECK(primes_in_ap(50, 3, 1) == std::vector<std::uint64_t>{7, 13, 19, 31, 37, 43});
    CHECK(primes_in_ap(5, 4, 3) == std::vector<std::uint64_t>{3});
    CHECK(primes_in_ap(100, 1, 0) == primes_up_to(100));
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q = 0; q <= 120; ++q) qs.push_back(q);
    for (std::uint64_t q : {997ull, 1000ull, 4096ull, 9999ull, 10000ull}) qs.push_back(q);
    for (auto q : qs) {
        const auto all = primes_up_to(q);
        for (std::uint64_t r = 1; r <= 30; ++r) {
            for (std::int64_t a = -2; a < static_cast<std::int64_t>(r); ++a) {
                std::vector<std::uint64_t> want;
                const auto ar = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(r)) + static_cast<std::int64_t>(r)) %
                                                           static_cast<std::int64_t>(r));
                for (auto p : all) {
                    if (p % r == ar) want.push_back(p);
                }
                if (primes_in_ap(q, r, a) != want) FAIL("Q=" << q << " r=" << r << " a=" << a);
            }
        }
    }
}

TEST_CASE("euler_phi counts units")
{
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    for (std::uint64_t k = 1; k <= 2000; ++k) {
        std::uint64_t units = 0;
        for (std::uint64_t i = 1; i <= k; ++i) units += std::gcd(i, k) == 1;
        CHECK(euler_phi(k) == units);
    }
}

TEST_CASE("floor_log2, checked_pow, powmod, decimal round trip")
{
    CHECK(floor_log2(1) == 0);
    CHECK(floor_log2(1023) == 9);
    CHECK(floor_log2(1024) == 10);
    CHECK(floor_log2(~u128{0}) == 127);
    CHECK_FALSE(checked_pow(2, 128));
    CHECK(checked_pow(2, 127) == u128{1} << 127);
    CHECK(powmod(3, 200, 1000000007) == static_cast<std::uint64_t>(boost::multiprecision::powm(BigInt(3), 200, BigInt(1000000007))));
    CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
    for (const char* text : {"0", "-1", "170141183460469231731687303715884105727", "-170141183460469231731687303715884105728"}) {
        CHECK(to_string(parse_i128(text)) == text);
    }
    CHECK_THROWS_AS(parse_i128("170141183460469231731687303715884105728"), std::invalid_argument);
    CHECK_THROWS_AS(parse_i128("12x"), std::invalid_argument);
}
