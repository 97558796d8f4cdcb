#pragma once

// Larger-sieve bounds, residue-image statistics and the theta constants.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dtup/arith.hpp"
#include "dtup/report.hpp"

namespace dtup {

inline constexpr double kSieveSlack = 1e-9;

struct ThetaConstant {
    std::uint64_t k = 0;
    unsigned m = 0;
    BigInt value;  // sum over units i mod k of gcd(i - 1, k)^m
};

ThetaConstant theta(std::uint64_t k, unsigned m);

/// A set in [1, N] (optional) with its image sizes modulo a set of primes.
struct SieveInstance {
    std::uint64_t N = 0;
    std::optional<std::vector<std::uint64_t>> set;
    std::map<std::uint64_t, std::uint64_t> images;  // p -> |A mod p|

    /// Reduces `set` modulo every prime.
    static SieveInstance from_set(std::uint64_t N, std::vector<std::uint64_t> set, const std::vector<std::uint64_t>& primes,
                                  unsigned workers = 1);
    /// Image sizes supplied directly; no set to compare against.
    static SieveInstance from_images(std::uint64_t N, std::map<std::uint64_t, std::uint64_t> images);
};

/// Gallagher's larger sieve over the primes p <= Q. Reports NotApplicable
/// when the denominator is not positive; otherwise compares |A| with the bound
/// (NoVerdict without a set).
BoundReport gallagher_bound(const SieveInstance& inst, std::uint64_t Q);

/// max{Q, 23 N exp(sum log p / p) / exp(sum log p / |A_p|)}; all primes must
/// lie in [2, Q].
BoundReport croot_elsholtz_bound(const SieveInstance& inst, std::uint64_t Q);

struct ResidueImages {
    std::map<std::uint64_t, std::uint64_t> sizes;
    std::vector<std::uint64_t> small_image;  // |A_p| < m
    std::vector<std::uint64_t> hits_zero;    // 0 in A_p
    std::vector<std::uint64_t> divides_n;    // p | n
    std::vector<std::uint64_t> remainder;    // none of the above
};

ResidueImages residue_images(const std::vector<std::uint64_t>& set, const std::vector<std::uint64_t>& primes,
                             std::uint64_t m, std::optional<std::int64_t> n = std::nullopt, unsigned workers = 1);

struct MertensSum {
    double sum = 0.0;          // sum log p / p
    double bound_ratio = 0.0;  // sum / log(|P| + 2)
};

MertensSum mertens_log_sum(const std::vector<std::uint64_t>& primes);

struct LinnikForm {
    bool applicable = false;  // x >= q^L
    double lower = 0.0;       // c x / (phi(q) sqrt(q))
};

/// Formula evaluation with caller-chosen constants; nothing is verified.
LinnikForm linnik_form(std::uint64_t q, double x, double c, double L);

}  // namespace dtup
