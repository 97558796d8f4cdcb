#include <doctest.h>

#include <random>

#include "dtup/predicate.hpp"
#include "oracles.hpp"

using namespace dtup;

TEST_CASE("qualifies examples")
{
    const auto w = qualifies(1, 3, Shift(1), PowerTarget::exact(2));
    CHECK(w.qualifies());
    CHECK(w.root == std::optional<u128>(2));
    CHECK_FALSE(qualifies(2, 3, Shift(1), PowerTarget::exact(2)).qualifies());
    const auto neg = qualifies(1, 2, Shift(-3), PowerTarget::any(ExponentCap(10)));
    CHECK_FALSE(neg.qualifies());
    CHECK_FALSE(neg.root.has_value());
    CHECK(neg.product_plus_n == -1);
    CHECK_THROWS_AS(Shift(0), std::invalid_argument);
}

TEST_CASE("verify_tuple examples")
{
    const auto r = verify_tuple({1, 3, 8, 120}, Shift(1), PowerTarget::exact(2));
    CHECK(r.holds);
    CHECK(r.witnesses.size() == 6);
    CHECK(verify_tuple({1, 2, 5}, Shift(-1), PowerTarget::exact(2)).holds);
    CHECK(verify_tuple({7}, Shift(5), PowerTarget::exact(3)).holds);
    const auto bad = verify_tuple({1, 2, 3}, Shift(1), PowerTarget::exact(2));
    CHECK_FALSE(bad.holds);
    CHECK(bad.failures.size() == 2);
    CHECK_THROWS_AS(verify_tuple({1, 1}, Shift(1), PowerTarget::exact(2)), std::invalid_argument);
    CHECK_THROWS_AS(verify_tuple({0, 1}, Shift(1), PowerTarget::exact(2)), std::invalid_argument);
}

TEST_CASE("witness roots reproduce the shifted product")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::uint64_t a = rng() % 3000 + 1;
        const std::uint64_t b = rng() % 3000 + 1;
        const std::int64_t n = static_cast<std::int64_t>(rng() % 41) - 20;
        if (n == 0) continue;
        const auto w = qualifies(a, b, Shift(n), PowerTarget::up_to(7));
        CHECK(w.product_plus_n == static_cast<i128>(a) * b + n);
        if (w.qualifies()) CHECK(*checked_pow(*w.root, *w.exponent) == static_cast<u128>(w.product_plus_n));
    }
}

TEST_CASE("verify_bipartite examples")
{
    CHECK(verify_bipartite({1, 2}, {24, 840}, Shift(1), 2).holds);
    CHECK(verify_bipartite({1, 3}, {8}, Shift(1), 2).holds);
    CHECK(verify_bipartite({1, 3}, {8}, Shift(1), 2).degenerate);
    CHECK_FALSE(verify_bipartite({2}, {3}, Shift(1), 3).holds);
    // includes a == b: 3*3 + 1 = 10 is not a square
    CHECK_FALSE(verify_bipartite({1, 3}, {3, 8}, Shift(1), 2).holds);
}

TEST_CASE("robust_pair_count examples")
{
    const auto full = robust_pair_count({1, 3, 8, 120}, Shift(1), 2);
    CHECK(full.count == 6);
    CHECK(full.delta == 1);
    const auto third = robust_pair_count({1, 2, 3}, Shift(1), 2);
    CHECK(third.count == 1);
    CHECK(third.delta == BigRational(1, 3));
    CHECK(robust_pair_count({1, 2, 3}, Shift(-100), 2).count == 0);
}

TEST_CASE("properties over random small sets")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<std::uint64_t> set;
        const std::size_t size = rng() % 4 + 2;
        while (set.size() < size) {
            const std::uint64_t v = rng() % 60 + 1;
            if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
        }
        const std::int64_t n = static_cast<std::int64_t>(rng() % 21) - 10;
        if (n == 0) continue;
        const unsigned k = static_cast<unsigned>(rng() % 3 + 2);
        const Shift s(n);
        if (verify_tuple(set, s, PowerTarget::exact(k)).holds) {
            for (unsigned d = k; d <= 8; ++d) CHECK(verify_tuple(set, s, PowerTarget::up_to(d)).holds);
        }
        if (verify_bipartite(set, set, s, k).holds) CHECK(verify_tuple(set, s, PowerTarget::exact(k)).holds);
        for (auto a : set) {
            for (auto b : set) {
                const auto ab = qualifies(a, b, s, PowerTarget::up_to(9));
                const auto ba = qualifies(b, a, s, PowerTarget::up_to(9));
                CHECK(ab.exponent == ba.exponent);
                CHECK(ab.root == ba.root);
            }
        }
    }
}

TEST_CASE("AnyPower agrees with an independent power enumeration")
{
    // Every perfect power up to the largest value, by listing x^e.
    const std::int64_t top = 500 * 500 + 50;
    std::vector<char> power(static_cast<std::size_t>(top) + 1, 0);
    power[1] = 1;
    for (std::int64_t x = 2; x * x <= top; ++x) {
        for (std::int64_t v = x * x; v <= top; v *= x) power[static_cast<std::size_t>(v)] = 1;
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60000; ++trial) {
        const std::uint64_t a = rng() % 500 + 1;
        const std::uint64_t b = rng() % 500 + 1;
        std::int64_t n = static_cast<std::int64_t>(rng() % 101) - 50;
        if (n == 0) n = 1;
        const std::uint64_t mag = static_cast<std::uint64_t>(n < 0 ? -n : n);
        const unsigned cap = floor_log2(static_cast<u128>(a * b + mag)) + 2;
        const auto w = qualifies(a, b, Shift(n), PowerTarget::any(ExponentCap(cap)));
        const std::int64_t v = static_cast<std::int64_t>(a * b) + n;
        const bool want = v >= 1 && power[static_cast<std::size_t>(v)];
        if (w.qualifies() != want) FAIL("a=" << a << " b=" << b << " n=" << n);
    }
    // exhaustive slice with the scan oracle
    for (std::uint64_t a = 1; a <= 30; ++a) {
        for (std::uint64_t b = a; b <= 30; ++b) {
            for (std::int64_t n = -50; n <= 50; ++n) {
                if (n == 0) continue;
                const auto w = qualifies(a, b, Shift(n), PowerTarget::any_for(30, Shift(n)));
                const BigInt v = BigInt(a) * b + n;
                CHECK(w.qualifies() == oracle::is_any_power_by_scan(v));
            }
        }
    }
}

TEST_CASE("normalize_set")
{
    CHECK(normalize_set({5, 1, 3}) == std::vector<std::uint64_t>{1, 3, 5});
    CHECK_THROWS_AS(normalize_set({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_set({0}), std::invalid_argument);
}
