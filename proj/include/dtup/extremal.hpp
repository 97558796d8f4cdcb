#pragma once

// Extremal graph bounds, the tabulated tuple constants and small exact
// forbidden-subgraph detection.

#include <cstdint>
#include <variant>
#include <vector>

#include "dtup/arith.hpp"
#include "dtup/graph.hpp"

namespace dtup {

struct TupleConstants {
    unsigned k = 0;
    unsigned r = 0;
    unsigned s = 0;
    BigRational t;
};

TupleConstants constants(unsigned k);

/// (1/2)(1 - 1/(r-1)) n^2, exactly.
BigRational turan_bound(std::uint64_t n, std::uint64_t r);

/// (t-1)^(1/s) n^(2-1/s) + (s-1) n with 1 <= s <= t.
double kst_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t);
/// 2 (t-1)^(1/r) m n^(1-1/r) + 2 (r-1) m with n <= m.
double ordered_kst_bound(std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t t);
/// k^(1/2) n^(3/2) + k n.
double colored_cycle_bound(std::uint64_t n, std::uint64_t kcolors);
/// (2/delta)^s (t-1) + 2s/delta with delta in (0, 1].
double robust_size_bound(double delta, std::uint64_t s, std::uint64_t t);

// Exact "edges <= bound" tests: both sides are raised to the power that
// clears the fractional exponent.
bool turan_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t r);
bool kst_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t s, std::uint64_t t);
bool ordered_kst_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t t);
bool colored_cycle_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t kcolors);

struct CompletePattern {
    std::size_t r;
};
struct BipartitePattern {
    std::size_t s;
    std::size_t t;
};
/// Cycle v1 v2 v3 v4 with colour(v1v2) = colour(v4v1) and colour(v2v3) = colour(v3v4).
struct ColoredCyclePattern {};

using Pattern = std::variant<CompletePattern, BipartitePattern, ColoredCyclePattern>;

struct SubgraphMatch {
    bool found = false;
    /// Labels. K_r: the clique; K_{s,t}: s labels then t labels; cycle: v1..v4.
    std::vector<std::uint64_t> witness;
};

SubgraphMatch check_forbidden_subgraph(const Graph& g, const Pattern& pattern);

}  // namespace dtup
