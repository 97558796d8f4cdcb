#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "dtup/ffmodel.hpp"
#include "oracles.hpp"

using namespace dtup;

namespace {

std::set<std::uint64_t> residues_by_enumeration(std::uint64_t p, std::uint64_t k)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < k; ++i) v = v * x % p;
        out.insert(k == 0 ? 1 : v);
    }
    return out;
}

std::vector<std::uint64_t> random_subset(std::uint64_t lo, std::uint64_t hi, std::size_t size, std::mt19937_64& rng)
{
    std::set<std::uint64_t> s;
    while (s.size() < size) s.insert(lo + rng() % (hi - lo + 1));
    return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("power_residues")
{
    CHECK(power_residues(7, 3) == std::vector<std::uint64_t>{0, 1, 6});
    CHECK(power_residues(5, 2) == std::vector<std::uint64_t>{0, 1, 4});
    CHECK(power_residues(11, 3).size() == 11);  // gcd(3, 10) = 1
    for (auto p : primes_up_to(120)) {
        for (std::uint64_t k = 1; k <= 14; ++k) {
            const auto got = power_residues(p, k);
            const auto want = residues_by_enumeration(p, k);
            CHECK(std::vector<std::uint64_t>(want.begin(), want.end()) == got);
            CHECK(got == power_residues(p, std::gcd(k, p - 1)));
        }
    }
}

TEST_CASE("character table")
{
    for (auto p : primes_up_to(200)) {
        if (p < 3) continue;
        const CharacterTable t(p);
        std::set<std::uint64_t> seen;
        for (std::uint64_t x = 1; x < p; ++x) {
            CHECK(powmod(t.generator(), t.dlog(x), p) == x);
            CHECK(t.power_of_generator(t.dlog(x)) == x);
            seen.insert(powmod(t.generator(), x - 1, p));
            CHECK(std::abs(t.value(0, x) - std::complex<double>(1.0, 0.0)) < 1e-12);
        }
        CHECK(seen.size() == p - 1);  // the generator is primitive
        CHECK(std::abs(t.value(1, 0)) == 0.0);
        std::mt19937_64 rng(p);
        for (int trial = 0; trial < 50; ++trial) {
            const std::uint64_t j = rng() % (p - 1);
            const std::uint64_t x = rng() % (p - 1) + 1;
            const std::uint64_t y = rng() % (p - 1) + 1;
            CHECK(std::abs(t.value(j, x * y % p) - t.value(j, x) * t.value(j, y)) < 1e-12);
        }
        // orthogonality for every order d dividing p - 1
        for (std::uint64_t d = 2; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            const auto h = residues_by_enumeration(p, d);
            const std::uint64_t base = (p - 1) / d;
            for (std::uint64_t x = 1; x < p; ++x) {
                std::complex<double> sum = 0.0;
                for (std::uint64_t i = 0; i < d; ++i) sum += t.value(i * base, x);
                const double want = h.count(x) ? static_cast<double>(d) : 0.0;
                CHECK(std::abs(sum - want) < 1e-9);
            }
        }
    }
    const CharacterTable seven(7);
    CHECK(std::abs(seven.value(3, 3) - std::complex<double>(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(seven.value(3, 2) - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK_THROWS_AS(CharacterTable(9), std::invalid_argument);
}

TEST_CASE("verify_vinogradov")
{
    const CharacterTable t(11);
    std::vector<std::uint64_t> all;
    for (std::uint64_t a = 1; a < 11; ++a) all.push_back(a);
    for (std::uint64_t j = 1; j < 10; ++j) CHECK(verify_vinogradov(t, 1, j, all, all).holds());
    const auto empty = verify_vinogradov(t, 1, 1, {}, all);
    CHECK(empty.lhs == 0.0);
    CHECK(empty.holds());
    CHECK_THROWS_AS(verify_vinogradov(t, 1, 0, all, all), std::invalid_argument);
    CHECK_THROWS_AS(verify_vinogradov(t, 1, 1, {0, 1}, all), std::invalid_argument);

    // the reported sum against a direct recomputation from dlog
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const auto primes = primes_up_to(31);
        const std::uint64_t p = primes[1 + rng() % (primes.size() - 1)];
        const CharacterTable table(p);
        const std::uint64_t j = 1 + rng() % (p - 2);
        const std::uint64_t lambda = 1 + rng() % (p - 1);
        const auto a = random_subset(1, p - 1, 1 + rng() % (p - 1), rng);
        const auto b = random_subset(1, p - 1, 1 + rng() % (p - 1), rng);
        std::complex<double> sum = 0.0;
        for (auto x : a) {
            for (auto y : b) {
                const std::uint64_t v = (x * y + lambda) % p;
                if (v == 0) continue;
                const double angle = 2.0 * M_PI * static_cast<double>(j * table.dlog(v) % (p - 1)) / static_cast<double>(p - 1);
                sum += std::polar(1.0, angle);
            }
        }
        const auto r = verify_vinogradov(table, lambda, j, a, b);
        CHECK(std::abs(r.lhs - std::abs(sum)) < 1e-9);
        CHECK(r.holds());
    }
}

TEST_CASE("ff_clique_bound against a clique oracle")
{
    for (auto p : primes_up_to(67)) {
        if (p < 5) continue;
        std::vector<std::vector<std::uint64_t>> prime_sets;
        for (auto q : prime_factors(p - 1)) prime_sets.push_back({q});
        prime_sets.push_back(prime_factors(p - 1));
        for (const auto& qs : prime_sets) {
            for (std::uint64_t lambda : {std::uint64_t{1}, std::uint64_t{2}, p - 1}) {
                std::set<std::uint64_t> allowed;
                for (auto q : qs) {
                    const auto r = residues_by_enumeration(p, q);
                    allowed.insert(r.begin(), r.end());
                }
                const auto want = oracle::max_clique_by_extension(p - 1, [&](std::size_t i, std::size_t j) {
                    return allowed.count(((i + 1) * (j + 1) + lambda) % p) > 0;
                });
                const auto r = ff_clique_bound(p, lambda, qs);
                CHECK(r.max_size == want.first);
                CHECK(r.exhaustive);
                CHECK(r.report.holds());
                CHECK(r.witness.size() == r.max_size);
                for (auto a : r.witness) {
                    for (auto b : r.witness) {
                        if (a != b) CHECK(allowed.count((a * b + lambda) % p));
                    }
                }
            }
        }
    }
    const auto seven = ff_clique_bound(7, 1, {2});
    CHECK(seven.report.rhs == doctest::Approx((2.0 * std::sqrt(7.0) + 2.0) * 2.0));
    const auto degenerate = ff_clique_bound(13, 1, {});
    CHECK(degenerate.max_size <= 1);
    CHECK_THROWS_AS(ff_clique_bound(13, 1, {5}), std::invalid_argument);
    CHECK_THROWS_AS(ff_clique_bound(13, 1, {2, 2}), std::invalid_argument);
}

TEST_CASE("weil_model_B")
{
    const auto r = weil_model_B(13, 3, 1, {1});
    std::vector<std::uint64_t> want;
    const auto cubes = residues_by_enumeration(13, 3);
    for (std::uint64_t b = 0; b < 13; ++b) {
        if (cubes.count((b + 1) % 13)) want.push_back(b);
    }
    CHECK(r.b_set == want);
    CHECK(r.report.rhs == doctest::Approx(13.0 / 3.0 + std::sqrt(13.0)));
    const auto empty = weil_model_B(13, 3, 1, {});
    CHECK(empty.b_set.size() == 13);
    CHECK(empty.report.holds());
    CHECK_THROWS_AS(weil_model_B(11, 3, 1, {1}), std::invalid_argument);
}

TEST_CASE("verify_karatsuba and check_cor_kb")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto primes = primes_up_to(100);
        const std::uint64_t p = primes[1 + rng() % (primes.size() - 1)];
        const CharacterTable t(p);
        const std::uint64_t j = 1 + rng() % (p - 2);
        const std::uint64_t lambda = 1 + rng() % (p - 1);
        const auto a = random_subset(0, p - 1, rng() % p + 1, rng);
        const auto b = random_subset(1, p - 1, rng() % (p - 1) + 1, rng);
        for (unsigned nu = 1; nu <= 3; ++nu) CHECK(verify_karatsuba(t, lambda, a, b, nu, j).holds());
        if (std::find(a.begin(), a.end(), 0) == a.end()) {
            CHECK(verify_vinogradov(t, lambda, j, a, b).holds());
            CHECK(verify_karatsuba(t, lambda, a, b, 1, j).holds());
        }
    }
    const CharacterTable t(31);
    CHECK(verify_karatsuba(t, 1, {}, {1, 2}, 2, 1).lhs == 0.0);

    const auto na = check_cor_kb(31, 3, 1, {1, 2}, 1);
    CHECK(na.report.verdict == Verdict::NotApplicable);
    CHECK_THROWS_AS(check_cor_kb(29, 3, 1, {1}, 1), std::invalid_argument);  // gcd(3, 28) = 1
    std::vector<std::uint64_t> a;
    for (std::uint64_t x = 0; x < 31; ++x) a.push_back(x);
    const auto full = check_cor_kb(31, 3, 1, a, 1);
    const auto cubes = residues_by_enumeration(31, 3);
    std::size_t want = 0;
    for (std::uint64_t bb = 0; bb < 31; ++bb) {
        bool ok = true;
        for (auto x : a) ok = ok && cubes.count((x * bb + 1) % 31);
        want += ok;
    }
    CHECK(full.b_set.size() == want);
    CHECK(full.report.holds());
}
