#include "dtup/search.hpp"

#include <algorithm>
#include <cmath>

#include "dtup/parallel.hpp"

namespace dtup {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<std::chrono::milliseconds> remaining(std::optional<Clock::time_point> end)
{
    if (!end) return std::nullopt;
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*end - Clock::now());
    return std::max(left, std::chrono::milliseconds{0});
}

std::uint32_t edge_color(unsigned exponent, ColorRule rule)
{
    if (rule == ColorRule::MergeUpTo25 && exponent <= 23) return 1;
    return exponent;
}

}  // namespace

std::vector<std::uint64_t> integer_range(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (lo > hi) return out;
    out.reserve(hi - lo + 1);
    for (std::uint64_t v = lo;; ++v) {
        out.push_back(v);
        if (v == hi) break;
    }
    return out;
}

TupleGraph build_tuple_graph(std::vector<std::uint64_t> vertices, const Shift& n, const PowerTarget& target,
                             ColorRule rule, unsigned workers)
{
    vertices = normalize_set(std::move(vertices));
    const std::size_t size = vertices.size();
    std::vector<std::vector<std::pair<std::size_t, unsigned>>> rows(size);
    parallel_for(size, workers, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            const i128 value = static_cast<i128>(vertices[i]) * static_cast<i128>(vertices[j]) + n.value();
            if (auto e = qualifying_exponent(value, target)) rows[i].emplace_back(j, *e);
        }
    });
    TupleGraph g(std::move(vertices));
    for (std::size_t i = 0; i < size; ++i) {
        for (auto [j, e] : rows[i]) g.add_edge(i, j, edge_color(e, rule));
    }
    return g;
}

// ------------------------------------------------------------------ f(x)

PerfectPowerTable::PerfectPowerTable(std::uint64_t limit) : limit_(limit), table_(limit + 1, 0)
{
    if (limit >= 1) table_[1] = 2;
    if (limit < 4) return;
    for (auto p : primes_up_to(floor_log2(limit))) {
        for (std::uint64_t x = 2;; ++x) {
            const auto v = checked_pow(x, static_cast<unsigned>(p));
            if (!v || *v > limit) break;
            auto& slot = table_[static_cast<std::size_t>(*v)];
            if (slot == 0) slot = static_cast<std::uint8_t>(p);
        }
    }
}

FValue compute_f(std::uint64_t x, bool signed_shifts, const SearchOptions& options)
{
    if (x < 1) throw std::invalid_argument("compute_f needs x >= 1");
    if (x > 100000) throw std::invalid_argument("compute_f: x above 10^5 is out of desk range");

    const PerfectPowerTable table(x * x + x);
    std::vector<std::int64_t> shifts;
    for (std::uint64_t m = 1; m <= x; ++m) {
        shifts.push_back(static_cast<std::int64_t>(m));
        if (signed_shifts) shifts.push_back(-static_cast<std::int64_t>(m));
    }

    const std::optional<Clock::time_point> end =
        options.timeout ? std::optional(Clock::now() + *options.timeout) : std::nullopt;
    const auto vertices = integer_range(1, x);

    std::vector<CliqueResult> per_shift(shifts.size());
    parallel_for(shifts.size(), options.workers, [&](std::size_t idx) {
        const std::int64_t n = shifts[idx];
        TupleGraph g(vertices);
        for (std::uint64_t a = 1; a <= x; ++a) {
            for (std::uint64_t b = a + 1; b <= x; ++b) {
                const std::int64_t v = static_cast<std::int64_t>(a * b) + n;
                if (v <= 0) continue;
                if (unsigned e = table.smallest_exponent(static_cast<std::uint64_t>(v)); e != 0) {
                    g.add_edge(a - 1, b - 1, e);
                }
            }
        }
        CliqueOptions co;
        co.timeout = remaining(end);
        per_shift[idx] = max_clique(g, co);
    });

    FValue f;
    for (std::size_t idx = 0; idx < shifts.size(); ++idx) {
        const auto& r = per_shift[idx];
        if (!r.exhaustive) f.exhaustive = false;
        if (r.size > f.value) {
            f.value = r.size;
            f.witness_set = r.witness;
            f.witness_n = shifts[idx];
        }
    }
    return f;
}

// -------------------------------------------------------------- bicliques

BicliqueResult max_biclique_t(const std::vector<std::uint64_t>& a_range_in, const std::vector<std::uint64_t>& b_range_in,
                              const Shift& n, unsigned k, std::size_t s, const SearchOptions& options)
{
    if (s < 1) throw std::invalid_argument("biclique search needs s >= 1");
    const auto a_range = normalize_set(a_range_in);
    const auto b_range = normalize_set(b_range_in);
    const auto target = PowerTarget::exact(k);

    BicliqueResult result;
    if (a_range.size() < s) return result;

    std::vector<VertexSet> nbr(a_range.size(), VertexSet(b_range.size()));
    parallel_for(a_range.size(), options.workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < b_range.size(); ++j) {
            const i128 v = static_cast<i128>(a_range[i]) * static_cast<i128>(b_range[j]) + n.value();
            if (qualifying_exponent(v, target)) nbr[i].set(j);
        }
    });

    const std::optional<Clock::time_point> end =
        options.timeout ? std::optional(Clock::now() + *options.timeout) : std::nullopt;
    std::uint64_t ticks = 0;
    bool timed_out = false;

    std::vector<std::size_t> best_a;
    VertexSet best_common(b_range.size());
    std::size_t best_t = 0;

    std::vector<std::size_t> chosen;
    // Depth-first over ascending index tuples; only strict improvements are
    // kept, so the first optimum found is the lexicographically smallest A.
    auto dfs = [&](auto&& self, std::size_t start, const VertexSet& common) -> void {
        if (timed_out) return;
        if (end && (++ticks % 4096 == 0) && Clock::now() >= *end) {
            timed_out = true;
            return;
        }
        if (chosen.size() == s) {
            const std::size_t t = common.count();
            if (t > best_t) {
                best_t = t;
                best_a = chosen;
                best_common = common;
            }
            return;
        }
        const std::size_t remaining_slots = s - chosen.size();
        for (std::size_t i = start; i + remaining_slots <= a_range.size(); ++i) {
            VertexSet next = chosen.empty() ? nbr[i] : (common & nbr[i]);
            if (next.count() <= best_t) continue;
            chosen.push_back(i);
            self(self, i + 1, next);
            chosen.pop_back();
            if (timed_out) return;
        }
    };
    dfs(dfs, 0, VertexSet::full(b_range.size()));

    result.exhaustive = !timed_out;
    result.t = best_t;
    if (best_t == 0) {
        for (std::size_t i = 0; i < s; ++i) result.a_side.push_back(a_range[i]);
        return result;
    }
    for (auto i : best_a) result.a_side.push_back(a_range[i]);
    for (auto j : best_common.members()) result.b_side.push_back(b_range[j]);
    return result;
}

// ----------------------------------------------------------- power cycles

std::vector<PowerCycle> find_power_cycles(std::uint64_t lo, std::uint64_t hi, const Shift& n, unsigned p1, unsigned p2)
{
    if (lo < 1) throw std::invalid_argument("power cycle range must start at >= 1");
    const auto vertices = integer_range(lo, hi);
    const TupleGraph g1 = build_tuple_graph(vertices, n, PowerTarget::exact(p1));
    const TupleGraph g2 = p1 == p2 ? g1 : build_tuple_graph(vertices, n, PowerTarget::exact(p2));

    std::vector<PowerCycle> out;
    const std::size_t size = vertices.size();
    for (std::size_t a1 = 0; a1 < size; ++a1) {
        const auto& n1 = g1.neighbors(a1);
        for (std::size_t a2 = n1.first(); a2 != VertexSet::npos; a2 = n1.next(a2 + 1)) {
            for (std::size_t a4 = n1.first(); a4 != VertexSet::npos; a4 = n1.next(a4 + 1)) {
                if (a4 == a2) continue;
                VertexSet mid = g2.neighbors(a2) & g2.neighbors(a4);
                for (std::size_t a3 = mid.first(); a3 != VertexSet::npos; a3 = mid.next(a3 + 1)) {
                    if (a3 == a1) continue;
                    out.push_back({vertices[a1], vertices[a2], vertices[a3], vertices[a4]});
                }
            }
        }
    }
    return out;
}

// ------------------------------------------------------------ pair counts

PairCountReport pair_count_check(std::vector<std::uint64_t> set, const Shift& n, unsigned k)
{
    if (k < 2) throw std::invalid_argument("pair count needs k >= 2");
    set = normalize_set(std::move(set));
    PairCountReport out;
    out.set_size = set.size();

    const BigInt threshold = 2 * boost::multiprecision::pow(BigInt(n.magnitude()), 17);
    out.precondition_met = set.empty() || BigInt(set.front()) >= threshold;

    const auto target = PowerTarget::exact(k);
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (qualifies(set[i], set[j], n, target).qualifies()) ++out.count;
        }
    }

    const BigInt count(out.count);
    const BigInt size(set.size());
    const double sz = static_cast<double>(set.size());
    bool within = false;
    auto& r = out.report;
    r.lhs = static_cast<double>(out.count);
    if (k == 2) {
        r.quantity = "pairs(k=2) <= 10|A|^2/21";
        r.rhs = 10.0 * sz * sz / 21.0;
        within = 21 * count <= 10 * size * size;
    } else if (k == 3) {
        r.quantity = "pairs(k=3) <= 8|A|^(5/3)";
        r.rhs = 8.0 * std::pow(sz, 5.0 / 3.0);
        within = count * count * count <= 512 * boost::multiprecision::pow(size, 5);
    } else {
        r.quantity = "pairs(k>=4) <= 7|A|^(3/2)";
        r.rhs = 7.0 * std::pow(sz, 1.5);
        within = count * count <= 49 * size * size * size;
    }
    if (!out.precondition_met) {
        r.verdict = Verdict::NotApplicable;
        r.note = "elements below 2|n|^17 = " + threshold.str();
    } else {
        r.verdict = within ? Verdict::Holds : Verdict::Fails;
    }
    return out;
}

}  // namespace dtup
