#pragma once

// Decides whether explicit finite sets have the shifted-product properties
// D_k(n), D_{<=d}(n), D_{<=inf}(n) and the bipartite BD_k(n).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dtup/arith.hpp"

namespace dtup {

/// Nonzero shift n.
class Shift {
public:
    explicit Shift(std::int64_t n) : n_(n)
    {
        if (n == 0) throw std::invalid_argument("shift n must be nonzero");
    }
    std::int64_t value() const noexcept { return n_; }
    std::uint64_t magnitude() const noexcept
    {
        return n_ < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(n_) : static_cast<std::uint64_t>(n_);
    }

private:
    std::int64_t n_;
};

struct ExactK {
    unsigned k;
};
struct UpToD {
    unsigned d;
};
struct AnyPower {
    ExponentCap cap;
};

/// Codomain of the shifted products.
class PowerTarget {
public:
    static PowerTarget exact(unsigned k);
    static PowerTarget up_to(unsigned d);
    static PowerTarget any(ExponentCap cap);
    /// AnyPower with a cap of floor(log2(largest value)) so no exponent is missed.
    static PowerTarget any_for(std::uint64_t max_element, const Shift& n);

    const std::variant<ExactK, UpToD, AnyPower>& kind() const noexcept { return kind_; }
    std::string describe() const;

private:
    explicit PowerTarget(std::variant<ExactK, UpToD, AnyPower> kind) : kind_(kind) {}
    std::variant<ExactK, UpToD, AnyPower> kind_;
};

struct PairWitness {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    i128 product_plus_n = 0;
    std::optional<unsigned> exponent;
    std::optional<u128> root;

    bool qualifies() const noexcept { return exponent.has_value(); }
};

/// Exponent of a qualifying value under the target, or nullopt.
/// For UpToD/AnyPower this is the smallest qualifying prime exponent.
std::optional<unsigned> qualifying_exponent(i128 value, const PowerTarget& target);

PairWitness qualifies(std::uint64_t a, std::uint64_t b, const Shift& n, const PowerTarget& target);

struct TupleReport {
    bool holds = true;
    std::vector<PairWitness> witnesses;  // qualifying pairs, lexicographic
    std::vector<PairWitness> failures;   // failing pairs, lexicographic
};

/// Elements must be distinct and >= 1; they are checked in ascending order.
TupleReport verify_tuple(std::vector<std::uint64_t> set, const Shift& n, const PowerTarget& target);

struct BipartiteReport {
    bool holds = true;
    /// |A| < 2 or |B| < 2: the property proper needs both sides of size >= 2.
    bool degenerate = false;
    std::vector<PairWitness> witnesses;
    std::vector<PairWitness> failures;
};

/// Checks every ordered pair (a, b) in A x B, including a == b.
BipartiteReport verify_bipartite(std::vector<std::uint64_t> a_set, std::vector<std::uint64_t> b_set, const Shift& n,
                                 unsigned k);

struct RobustCount {
    std::uint64_t count = 0;
    std::uint64_t pairs = 0;  // C(|X|, 2)
    BigRational delta;        // count / pairs
};

RobustCount robust_pair_count(std::vector<std::uint64_t> set, const Shift& n, unsigned k);

/// Sorts, rejects zero/oversized elements and duplicates.
std::vector<std::uint64_t> normalize_set(std::vector<std::uint64_t> set);

}  // namespace dtup
