#pragma once

// Equal sums of like powers, the singular value matrix and the greedy
// selection of rows with pairwise distinct Leibniz factors.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtup/arith.hpp"
#include "dtup/predicate.hpp"

namespace dtup {

// ------------------------------------------------------------- power sums

/// Guard on the number of side sums held in memory.
inline constexpr std::uint64_t kMaxStoredSums = std::uint64_t{1} << 28;

struct PowerSumSolution {
    unsigned k = 0;
    std::vector<std::uint64_t> left;   // ascending
    std::vector<std::uint64_t> right;  // ascending
    BigInt value;
};

/// All value-disjoint pairs of sets of distinct integers in [1, H], each with
/// 1..max_terms elements and equal sums of k-th powers. Each solution has
/// left < right lexicographically; the list is sorted by (value, left, right).
std::vector<PowerSumSolution> equal_power_sums(unsigned k, unsigned max_terms, std::uint64_t H);

struct LpsReport {
    unsigned k = 0;
    std::uint64_t H = 0;
    /// Solutions with m + n < k (sides are multisets, no value on both sides).
    std::vector<PowerSumSolution> violations;
    std::uint64_t side_sums_checked = 0;
};

LpsReport lps_desk_check(unsigned k, std::uint64_t H);

// ------------------------------------------------------------ value matrix

using IntMatrix4 = std::array<std::array<BigInt, 4>, 4>;

/// Rows (u b_i + n, v b_i + n, u c_i + n, v c_i + n).
IntMatrix4 value_matrix(std::uint64_t u, std::uint64_t v, const Shift& n, const std::array<std::int64_t, 4>& b,
                        const std::array<std::int64_t, 4>& c);

struct SingularReport {
    BigInt det;
    bool singular = false;
};

/// Exact fraction-free (Bareiss) determinant.
SingularReport singular_check(const IntMatrix4& m);

// --------------------------------------------------------- Leibniz factors

using QuadMatrix = std::array<std::array<std::uint64_t, 4>, 4>;
/// Bit 4 * row + col set when that entry is known.
using CellMask = std::uint16_t;
inline constexpr CellMask kAllCells = 0xFFFF;

/// Products over every set of i cells in distinct rows and columns (the
/// Leibniz terms of all i x i minors, up to sign), restricted to known cells.
/// Entries must lie in [1, 2^32).
std::vector<u128> leibniz_factors(const QuadMatrix& m, unsigned i, CellMask known = kAllCells);

// ---------------------------------------------------------- greedy rows

/// Candidate element with its two roots: (x, y) in the first stage, (z, w)
/// in the second.
struct StreamRow {
    std::uint64_t element = 0;
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

struct FactorLedger {
    std::size_t factor_count = 0;     // |S_j|
    std::size_t quotients_above_one = 0;  // |Q_j n (1, inf)|
};

inline constexpr std::size_t kMaxLedgerFactors = 208;
inline constexpr std::size_t kMaxLedgerQuotients = 21736;

struct GreedyResult {
    std::array<std::size_t, 4> b_picks{};  // stream indices
    std::array<std::size_t, 4> c_picks{};
    QuadMatrix matrix{};                   // rows (x_i, y_i, z_i, w_i)
    std::array<FactorLedger, 4> ledgers{};
    std::size_t rows_consumed = 0;
    /// Independent re-check: all i x i factors pairwise distinct, i = 1..4.
    /// Only the last entry is guaranteed; two rows' products x_a y_b and
    /// x_c y_d over four distinct rows are not excluded by the b stage.
    std::array<bool, 4> distinct_by_size{};
    bool four_factors_distinct() const { return distinct_by_size[3]; }
};

struct GreedyProgress {
    std::string stage;  // "b" or "c"
    std::vector<std::size_t> picks;
    std::size_t rows_consumed = 0;
};

class StreamExhausted : public std::runtime_error {
public:
    explicit StreamExhausted(GreedyProgress progress);
    const GreedyProgress& progress() const noexcept { return progress_; }

private:
    GreedyProgress progress_;
};

/// Picks b_1..b_4 then c_1..c_4 from a stream with strictly increasing
/// elements. Throws StreamExhausted when the stream runs out.
GreedyResult greedy_distinct_rows(const std::vector<StreamRow>& stream);

enum class StreamKind {
    Uniform,   // both roots uniform in [lo, hi]
    Monotone,  // both roots increasing, first < second, first/second strictly increasing
};

/// Seeded synthetic stream with elements 1, 2, 3, ...
std::vector<StreamRow> synthetic_stream(StreamKind kind, std::uint64_t seed, std::size_t length, std::uint64_t lo = 2,
                                        std::uint64_t hi = 1000000);

/// Rows of a genuine bipartite setting: elements t >= 1 with u t + n = x^k and
/// v t + n = y^k, ascending, found by walking x from 1 to x_limit.
std::vector<StreamRow> genuine_stream(std::uint64_t u, std::uint64_t v, const Shift& n, unsigned k, std::uint64_t x_limit,
                                      std::size_t max_rows);

struct RatioMonotonicity {
    bool monotone = true;
    int direction = 0;  // -1 decreasing, +1 increasing, 0 constant or too few points
    std::uint64_t points = 0;
};

/// Checks that g(t) = (u t + n) / (v t + n) is strictly monotone over the
/// integers t in [lo, hi] with v t + n > 0, by exact cross-multiplication.
RatioMonotonicity ratio_monotone(std::uint64_t u, std::uint64_t v, const Shift& n, std::uint64_t lo, std::uint64_t hi);

}  // namespace dtup
