#pragma once

// Prime-field models: power residues, multiplicative characters and the
// character-sum inequalities they are checked against.

#include <chrono>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtup/report.hpp"

namespace dtup {

inline constexpr std::uint64_t kMaxFieldPrime = 1000000;
inline constexpr double kCharSumTolerance = 1e-6;

/// Primitive root and discrete logarithms of F_p*.
class CharacterTable {
public:
    explicit CharacterTable(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t generator() const noexcept { return g_; }
    std::uint64_t order() const noexcept { return p_ - 1; }

    /// dlog(g^a) = a for 0 <= a < p - 1; x must be a nonzero residue.
    std::uint64_t dlog(std::uint64_t x) const;
    std::uint64_t power_of_generator(std::uint64_t a) const { return pow_.at(a % order()); }

    /// chi_j(x) = exp(2 pi i j dlog(x) / (p - 1)); chi_j(0) = 0.
    std::complex<double> value(std::uint64_t j, std::uint64_t x) const;

private:
    std::uint64_t p_;
    std::uint64_t g_ = 1;
    std::vector<std::uint32_t> dlog_;
    std::vector<std::uint32_t> pow_;
    std::vector<std::complex<double>> roots_;  // exp(2 pi i e / (p - 1))
};

std::complex<double> char_value(const CharacterTable& table, std::uint64_t j, std::uint64_t x);

/// {x^k mod p : x in F_p}, ascending, including 0.
std::vector<std::uint64_t> power_residues(std::uint64_t p, std::uint64_t k);

/// |sum_{a in A, b in B} chi_j(ab + lambda)| against sqrt(p|A||B|).
BoundReport verify_vinogradov(const CharacterTable& table, std::uint64_t lambda, std::uint64_t j,
                              const std::vector<std::uint64_t>& a_set, const std::vector<std::uint64_t>& b_set,
                              double tol = kCharSumTolerance);

struct FfCliqueReport {
    std::size_t max_size = 0;
    std::vector<std::uint64_t> witness;
    bool exhaustive = true;
    BoundReport report;
};

/// Largest A in F_p* with ab + lambda in the union of the p_i-th power sets
/// for all distinct a, b, against (2^m sqrt(p) + 2) prod (1 - 1/p_i)^-1.
FfCliqueReport ff_clique_bound(std::uint64_t p, std::uint64_t lambda, const std::vector<std::uint64_t>& primes,
                               std::optional<std::chrono::milliseconds> timeout = std::nullopt);

struct ResidueSetReport {
    std::vector<std::uint64_t> b_set;
    BoundReport report;
};

/// B = {b in F_p : ab + lambda is a d-th power for all a in A}, against
/// p / d^|A| + |A| sqrt(p).
ResidueSetReport weil_model_B(std::uint64_t p, std::uint64_t d, std::uint64_t lambda,
                              const std::vector<std::uint64_t>& a_set);

/// |sum chi_j(ab + lambda)| against
/// |B|^((2nu-1)/2nu) (2nu |A|^(2nu) sqrt(p) + (2nu)^nu |A|^nu p)^(1/2nu).
BoundReport verify_karatsuba(const CharacterTable& table, std::uint64_t lambda, const std::vector<std::uint64_t>& a_set,
                             const std::vector<std::uint64_t>& b_set, unsigned nu, std::uint64_t j,
                             double tol = kCharSumTolerance);

/// B = {b in F_p : ab + lambda is a k-th power for all a in A}, against
/// 12 nu sqrt(p). Not applicable while |A| < 2 nu p^(1/2nu).
ResidueSetReport check_cor_kb(std::uint64_t p, std::uint64_t k, std::uint64_t lambda,
                              const std::vector<std::uint64_t>& a_set, unsigned nu);

}  // namespace dtup
