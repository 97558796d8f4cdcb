#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "dtup/sieve.hpp"
#include "oracles.hpp"

using namespace dtup;

TEST_CASE("theta by direct summation")
{
    CHECK(theta(3, 1).value == 4);
    for (std::uint64_t k = 2; k <= 60; ++k) {
        CHECK(theta(k, 0).value == euler_phi(k));
        for (unsigned m = 0; m <= 8; ++m) {
            BigInt want = 0;
            for (std::uint64_t i = 1; i <= k; ++i) {
                if (std::gcd(i, k) == 1) want += boost::multiprecision::pow(BigInt(std::gcd(i - 1, k)), m);
            }
            const auto got = theta(k, m).value;
            CHECK(got == want);
            const BigInt floor = boost::multiprecision::pow(BigInt(k), m) + euler_phi(k) - 1;
            CHECK(got >= floor);
            if (oracle::is_prime_by_trial(k)) CHECK(got == floor);
        }
    }
    CHECK_THROWS_AS(theta(1, 2), std::invalid_argument);
}

TEST_CASE("larger sieve soundness on random sets")
{
    std::mt19937_64 rng(10);
    const auto primes = primes_up_to(100);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<std::uint64_t> s;
        const std::uint64_t modulus = 1 + rng() % 12;
        const std::size_t size = 1 + rng() % (trial % 2 == 0 ? 2000 : 10000 / modulus);
        while (s.size() < size) {
            const std::uint64_t v = 1 + rng() % 10000;
            if (v % modulus == 1 % modulus || trial % 2 == 0) s.insert(v);
        }
        std::vector<std::uint64_t> set(s.begin(), s.end());
        const auto inst = SieveInstance::from_set(10000, set, primes, 3);
        for (const auto& [p, size_p] : inst.images) {
            std::set<std::uint64_t> image;
            for (auto a : set) image.insert(a % p);
            CHECK(size_p == image.size());
            CHECK(size_p <= std::min<std::uint64_t>(p, set.size()));
        }
        const auto g = gallagher_bound(inst, 100);
        if (g.verdict != Verdict::NotApplicable) CHECK(g.holds());
        CHECK(croot_elsholtz_bound(inst, 100).holds());
    }
}

TEST_CASE("gallagher and croot-elsholtz edge cases")
{
    const auto inst = SieveInstance::from_images(1000, {});
    CHECK(croot_elsholtz_bound(inst, 10).rhs == doctest::Approx(23000.0));
    CHECK(croot_elsholtz_bound(inst, 10).verdict == Verdict::NoVerdict);
    CHECK(gallagher_bound(inst, 10).verdict == Verdict::NotApplicable);
    // constant set: every image has size 1
    const auto primes = primes_up_to(50);
    const auto one = SieveInstance::from_set(1000, {7}, primes);
    double expo = 0.0;
    for (auto p : primes) expo += std::log(static_cast<double>(p)) * (1.0 / static_cast<double>(p) - 1.0);
    const auto r = croot_elsholtz_bound(one, 50);
    CHECK(r.rhs == doctest::Approx(std::max(50.0, 23.0 * 1000.0 * std::exp(expo))));
    CHECK_THROWS_AS(croot_elsholtz_bound(one, 40), std::invalid_argument);
    CHECK_THROWS_AS(SieveInstance::from_set(10, {11}, {2}), std::invalid_argument);

    // Gallagher formula by hand: {1, 61} is one class mod 2, 3, 5 and two mod 7
    const auto g = gallagher_bound(SieveInstance::from_set(61, {1, 61}, {2, 3, 5, 7}), 7);
    const double num = std::log(210.0 / 61.0);
    const double den = std::log(30.0 / 61.0) + std::log(7.0) / 2.0;
    REQUIRE(g.verdict == Verdict::Holds);
    CHECK(g.rhs == doctest::Approx(num / den));
}

TEST_CASE("residue_images classification")
{
    const auto r = residue_images({3, 10}, {7}, 2);
    CHECK(r.sizes.at(7) == 1);
    CHECK(r.small_image == std::vector<std::uint64_t>{7});
    CHECK(r.hits_zero.empty());
    CHECK(residue_images({7, 14}, {7}, 1).hits_zero == std::vector<std::uint64_t>{7});
    CHECK(residue_images({1, 2}, {3, 5}, 1, 15).divides_n == std::vector<std::uint64_t>{3, 5});

    std::mt19937_64 rng(12);
    const auto primes = primes_up_to(200);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> set;
        const std::size_t m = 2 + rng() % 5;
        for (std::size_t i = 0; i < m; ++i) set.push_back(1 + rng() % 100000);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        const auto r1 = residue_images(set, primes, set.size(), -30, 2);
        // shifting elements by multiples of p leaves each image unchanged
        for (auto p : primes) {
            std::vector<std::uint64_t> shifted;
            for (auto a : set) shifted.push_back(a + p * (1 + rng() % 5));
            CHECK(residue_images(shifted, {p}, set.size()).sizes.at(p) == r1.sizes.at(p));
        }
        // the small-image count claim with N = max element
        const double log2n = std::log2(static_cast<double>(set.back()));
        CHECK(static_cast<double>(r1.small_image.size()) <= static_cast<double>(set.size() * set.size()) * log2n);
        std::set<std::uint64_t> covered;
        for (auto v : {r1.small_image, r1.hits_zero, r1.divides_n, r1.remainder}) covered.insert(v.begin(), v.end());
        CHECK(covered.size() == primes.size());
    }
}

TEST_CASE("mertens and linnik calculators")
{
    CHECK(mertens_log_sum({2}).sum == doctest::Approx(std::log(2.0) / 2.0));
    CHECK(mertens_log_sum({}).sum == 0.0);
    const auto m = mertens_log_sum(primes_up_to(100));
    CHECK(std::abs(m.sum - std::log(100.0)) < 2.0);
    CHECK(linnik_form(1, 50.0, 2.0, 3.0).lower == doctest::Approx(100.0));
    CHECK(linnik_form(4, 64.0, 1.0, 3.0).applicable);
    CHECK(linnik_form(4, 64.0, 1.0, 3.0).lower == doctest::Approx(64.0 / (2.0 * 2.0)));
    CHECK_FALSE(linnik_form(4, 63.0, 1.0, 3.0).applicable);
}
