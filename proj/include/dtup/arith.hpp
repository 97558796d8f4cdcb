#pragma once

// Exact integer primitives: integer k-th roots, perfect-power tests, prime
// tables and a few multiplicative functions.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dtup {

using u128 = unsigned __int128;
using i128 = __int128;
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Largest element value accepted anywhere a PosInt is read. Keeps a*b+n
/// inside a signed 128-bit accumulator for any pair of elements.
inline constexpr std::uint64_t kMaxElement = (std::uint64_t{1} << 63) - 1;

/// Largest prime exponent to test when looking for perfect powers.
class ExponentCap {
public:
    explicit ExponentCap(unsigned cap) : cap_(cap)
    {
        if (cap < 2) throw std::invalid_argument("exponent cap must be >= 2");
    }
    unsigned value() const noexcept { return cap_; }

private:
    unsigned cap_;
};

/// floor(m^(1/k)); k >= 1.
u128 ikroot(u128 m, unsigned k);
BigInt ikroot(const BigInt& m, unsigned k);

/// Positive x with x^k == m, if any. m == 0 never qualifies.
std::optional<u128> is_kth_power(u128 m, unsigned k);
std::optional<BigInt> is_kth_power(const BigInt& m, unsigned k);

/// Smallest prime p <= cap such that m is a perfect p-th power (m >= 1).
std::optional<unsigned> smallest_power_exponent(u128 m, ExponentCap cap);

/// floor(log2(m)) for m >= 1.
unsigned floor_log2(u128 m);

/// r^k, or nullopt when the result does not fit in 128 bits.
std::optional<u128> checked_pow(u128 r, unsigned k);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::vector<std::uint64_t> primes_in_ap(std::uint64_t limit, std::uint64_t modulus, std::int64_t residue);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t k);

/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

std::string to_string(u128 v);
std::string to_string(i128 v);

/// Decimal parsing with overflow detection; throws std::invalid_argument.
i128 parse_i128(std::string_view text);

}  // namespace dtup
