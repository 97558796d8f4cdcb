#pragma once

// Tuple graphs over explicit vertex sets, exact clique/biclique searches and
// the f(x) / f~(x) extremal functions.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "dtup/graph.hpp"
#include "dtup/predicate.hpp"
#include "dtup/report.hpp"

namespace dtup {

using TupleGraph = Graph;

enum class ColorRule {
    SmallestPrime,  // colour = smallest qualifying prime exponent
    MergeUpTo25,    // colour 1 when the value lies in V_25, else the smallest prime
};

struct SearchOptions {
    std::optional<std::chrono::milliseconds> timeout;
    unsigned workers = 1;
};

/// Edge {a, b} present iff a*b + n qualifies under the target.
TupleGraph build_tuple_graph(std::vector<std::uint64_t> vertices, const Shift& n, const PowerTarget& target,
                             ColorRule rule = ColorRule::SmallestPrime, unsigned workers = 1);

/// [lo, hi] as a vertex list; empty when lo > hi.
std::vector<std::uint64_t> integer_range(std::uint64_t lo, std::uint64_t hi);

/// Smallest prime exponent for every perfect power up to a limit.
class PerfectPowerTable {
public:
    explicit PerfectPowerTable(std::uint64_t limit);
    std::uint64_t limit() const noexcept { return limit_; }
    /// 0 when v is not a perfect power (or v == 0).
    unsigned smallest_exponent(std::uint64_t v) const { return v <= limit_ ? table_[v] : 0u; }

private:
    std::uint64_t limit_;
    std::vector<std::uint8_t> table_;
};

struct FValue {
    std::size_t value = 0;
    std::vector<std::uint64_t> witness_set;
    std::int64_t witness_n = 0;
    bool exhaustive = true;
};

/// f(x) (shifts 1..x) or f~(x) (shifts 1 <= |n| <= x), as the clique number
/// of the D_{<=inf}(n) graph on [1, x], maximised over the shifts.
FValue compute_f(std::uint64_t x, bool signed_shifts, const SearchOptions& options = {});

struct BicliqueResult {
    std::size_t t = 0;
    std::vector<std::uint64_t> a_side;
    std::vector<std::uint64_t> b_side;
    bool exhaustive = true;
};

/// Largest t such that some s-subset A of a_range and t-subset B of b_range
/// form BD_k(n). Ties: lexicographically smallest A, and B is then the full
/// common neighbourhood.
BicliqueResult max_biclique_t(const std::vector<std::uint64_t>& a_range, const std::vector<std::uint64_t>& b_range,
                              const Shift& n, unsigned k, std::size_t s, const SearchOptions& options = {});

using PowerCycle = std::array<std::uint64_t, 4>;

/// Ordered quadruples of distinct integers in [lo, hi] with a1a2+n, a4a1+n
/// perfect p1-th powers and a2a3+n, a3a4+n perfect p2-th powers.
std::vector<PowerCycle> find_power_cycles(std::uint64_t lo, std::uint64_t hi, const Shift& n, unsigned p1, unsigned p2);

struct PairCountReport {
    std::uint64_t count = 0;
    std::size_t set_size = 0;
    bool precondition_met = true;
    BoundReport report;
};

/// Counts pairs {a, b} with ab + n a k-th power and compares them with
/// 10|A|^2/21 (k = 2), 8|A|^(5/3) (k = 3) or 7|A|^(3/2) (k >= 4). The
/// comparison is exact. Elements below 2|n|^17 make the report not applicable.
PairCountReport pair_count_check(std::vector<std::uint64_t> set, const Shift& n, unsigned k);

}  // namespace dtup
