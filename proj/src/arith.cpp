#include "dtup/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dtup {

namespace {

constexpr u128 kU128Max = ~u128{0};

// r^k <= m, without overflowing.
bool pow_leq(u128 r, unsigned k, u128 m)
{
    if (r <= 1) return r <= m;
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (acc > m / r) return false;
        acc *= r;
    }
    return acc <= m;
}

}  // namespace

std::optional<u128> checked_pow(u128 r, unsigned k)
{
    u128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r != 0 && acc > kU128Max / r) return std::nullopt;
        acc *= r;
    }
    return acc;
}

unsigned floor_log2(u128 m)
{
    if (m == 0) throw std::invalid_argument("floor_log2(0)");
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    if (hi != 0) return 127u - static_cast<unsigned>(__builtin_clzll(hi));
    return 63u - static_cast<unsigned>(__builtin_clzll(static_cast<std::uint64_t>(m)));
}

u128 ikroot(u128 m, unsigned k)
{
    if (k == 0) throw std::invalid_argument("ikroot: k must be >= 1");
    if (m <= 1 || k == 1) return m;
    if (k > floor_log2(m)) return 1;  // 2^k > m

    // Floating seed, then exact correction by multiplication.
    const long double seed = std::pow(static_cast<long double>(m), 1.0L / static_cast<long double>(k));
    u128 r = seed < 1.0L ? u128{1} : static_cast<u128>(seed);
    while (!pow_leq(r, k, m)) --r;
    while (pow_leq(r + 1, k, m)) ++r;
    return r;
}

BigInt ikroot(const BigInt& m, unsigned k)
{
    if (k == 0) throw std::invalid_argument("ikroot: k must be >= 1");
    if (m < 0) throw std::invalid_argument("ikroot: negative argument");
    if (m <= 1 || k == 1) return m;
    const auto bits = static_cast<unsigned>(boost::multiprecision::msb(m)) + 1;
    if (k >= bits) return 1;

    // Integer Newton from an overestimate decreases monotonically to the floor.
    BigInt r = BigInt{1} << ((bits + k - 1) / k);
    for (;;) {
        BigInt next = ((k - 1) * r + m / boost::multiprecision::pow(r, k - 1)) / k;
        if (next >= r) break;
        r = std::move(next);
    }
    while (boost::multiprecision::pow(r, k) > m) --r;
    while (boost::multiprecision::pow(BigInt{r + 1}, k) <= m) ++r;
    return r;
}

std::optional<u128> is_kth_power(u128 m, unsigned k)
{
    if (m == 0) return std::nullopt;
    if (k == 1) return m;
    const u128 r = ikroot(m, k);
    const auto back = checked_pow(r, k);
    if (back && *back == m) return r;
    return std::nullopt;
}

std::optional<BigInt> is_kth_power(const BigInt& m, unsigned k)
{
    if (m <= 0) return std::nullopt;
    BigInt r = ikroot(m, k);
    if (boost::multiprecision::pow(r, k) == m) return r;
    return std::nullopt;
}

std::optional<unsigned> smallest_power_exponent(u128 m, ExponentCap cap)
{
    if (m == 0) return std::nullopt;
    if (m == 1) return 2u;
    const unsigned lg = floor_log2(m);
    const unsigned top = std::min(cap.value(), lg);
    // Exponents above log2(m) cannot occur, so primes below 128 suffice.
    static constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,  43,  47,  53,
                                                59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    for (unsigned p : kSmallPrimes) {
        if (p > top) break;
        if (is_kth_power(m, p)) return p;
    }
    return std::nullopt;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        if (i <= limit / i) {
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    return out;
}

std::vector<std::uint64_t> primes_in_ap(std::uint64_t limit, std::uint64_t modulus, std::int64_t residue)
{
    if (modulus == 0) throw std::invalid_argument("primes_in_ap: modulus must be >= 1");
    const auto m = static_cast<std::int64_t>(modulus);
    const auto target = static_cast<std::uint64_t>(((residue % m) + m) % m);
    std::vector<std::uint64_t> out;
    for (auto p : primes_up_to(limit)) {
        if (p % modulus == target) out.push_back(p);
    }
    return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod)
{
    if (mod == 1) return 0;
    u128 result = 1;
    u128 b = base % mod;
    while (exp != 0) {
        if (exp & 1u) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic below 3.3e24.
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = static_cast<std::uint64_t>(u128{x} * x % n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t k)
{
    if (k == 0) throw std::invalid_argument("euler_phi: k must be >= 1");
    std::uint64_t result = k;
    for (auto p : prime_factors(k)) result = result / p * (p - 1);
    return result;
}

std::string to_string(u128 v)
{
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v)
{
    if (v >= 0) return to_string(static_cast<u128>(v));
    // Negate through unsigned to cover the minimum value.
    return "-" + to_string(static_cast<u128>(0) - static_cast<u128>(v));
}

i128 parse_i128(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty integer");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
    // the negative range reaches one further than the positive one
    const u128 limit = static_cast<u128>(std::numeric_limits<i128>::max()) + (negative ? 1 : 0);
    u128 acc = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
        const auto digit = static_cast<unsigned>(c - '0');
        if (acc > (limit - digit) / 10) throw std::invalid_argument("integer out of range: " + std::string(text));
        acc = acc * 10 + digit;
    }
    return negative ? static_cast<i128>(u128{0} - acc) : static_cast<i128>(acc);
}

}  // namespace dtup
