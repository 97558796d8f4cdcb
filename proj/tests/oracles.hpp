#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. Deliberately naive: no tables, no bit tricks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "dtup/arith.hpp"

namespace oracle {

using dtup::BigInt;

// x^e == m for some x >= 1, found by counting x upwards.
inline bool is_power_by_scan(const BigInt& m, unsigned e)
{
    if (m < 1) return false;
    for (BigInt x = 1;; ++x) {
        const BigInt v = boost::multiprecision::pow(x, e);
        if (v == m) return true;
        if (v > m) return false;
    }
}

// Any exponent e >= 2 (prime or not).
inline bool is_any_power_by_scan(const BigInt& m)
{
    if (m < 1) return false;
    if (m == 1) return true;
    for (unsigned e = 2; BigInt(1) << e <= m; ++e) {
        if (is_power_by_scan(m, e)) return true;
    }
    return false;
}

inline bool is_prime_by_trial(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Size of the largest subset of {0..n-1} that is pairwise adjacent.
template <class Adjacent>
std::size_t max_clique_by_subsets(std::size_t n, Adjacent&& adjacent)
{
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1u)) continue;
            for (std::size_t j = i + 1; j < n && ok; ++j) {
                if (mask >> j & 1u) ok = adjacent(i, j);
            }
        }
        if (ok) best = size;
    }
    return best;
}

// Every clique, grown one vertex at a time in increasing order; returns the
// largest size and the lexicographically first clique of that size.
template <class Adjacent>
std::pair<std::size_t, std::vector<std::size_t>> max_clique_by_extension(std::size_t n, Adjacent&& adjacent)
{
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;
    auto grow = [&](auto&& self, std::size_t from) -> void {
        if (current.size() > best.size()) best = current;
        for (std::size_t v = from; v < n; ++v) {
            bool ok = true;
            for (auto u : current) ok = ok && adjacent(u, v);
            if (!ok) continue;
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    grow(grow, 0);
    return {best.size(), best};
}

}  // namespace oracle
