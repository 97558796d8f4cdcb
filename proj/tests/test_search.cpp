#include <doctest.h>

#include <random>

#include "dtup/search.hpp"
#include "oracles.hpp"

using namespace dtup;

namespace {

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(10 * i + 3);
    Graph g(labels);
    std::bernoulli_distribution edge(density);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (edge(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

std::vector<std::uint64_t> labels_of(const Graph& g, const std::vector<std::size_t>& vs)
{
    std::vector<std::uint64_t> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

}  // namespace

TEST_CASE("build_tuple_graph examples")
{
    const auto g = build_tuple_graph(integer_range(1, 10), Shift(1), PowerTarget::exact(2));
    CHECK(g.adjacent(*g.index_of(1), *g.index_of(3)));
    CHECK(g.adjacent(*g.index_of(3), *g.index_of(8)));
    CHECK(build_tuple_graph(integer_range(1, 10), Shift(1), PowerTarget::exact(13)).edge_count() == 0);
    CHECK(build_tuple_graph({}, Shift(1), PowerTarget::exact(2)).size() == 0);
    CHECK(integer_range(5, 4).empty());
}

TEST_CASE("edge set and colours match qualifies")
{
    const auto vertices = integer_range(1, 150);
    for (std::int64_t n : {1, -1, 7}) {
        const Shift s(n);
        const auto target = PowerTarget::any_for(150, s);
        const auto g = build_tuple_graph(vertices, s, target);
        const auto g4 = build_tuple_graph(vertices, s, target, ColorRule::SmallestPrime, 4);
        CHECK(g.edges().size() == g4.edges().size());
        for (std::size_t u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (std::size_t v = u + 1; v < g.size(); ++v) {
                const auto w = qualifies(g.label(u), g.label(v), s, target);
                REQUIRE(g.adjacent(u, v) == w.qualifies());
                if (!w.qualifies()) continue;
                const unsigned c = g.color(u, v);
                CHECK(g4.color(u, v) == c);
                const BigInt value = BigInt(g.label(u)) * g.label(v) + n;
                CHECK(oracle::is_power_by_scan(value, c));
                for (unsigned p = 2; p < c; ++p) {
                    if (oracle::is_prime_by_trial(p)) CHECK_FALSE(oracle::is_power_by_scan(value, p));
                }
            }
        }
    }
}

TEST_CASE("v25 colouring merges small exponents")
{
    const auto g = build_tuple_graph(integer_range(1, 60), Shift(1), PowerTarget::any(ExponentCap(29)), ColorRule::MergeUpTo25);
    for (const auto& e : g.edges()) CHECK(e.color == 1);
}

TEST_CASE("max_clique examples")
{
    const auto g = build_tuple_graph(integer_range(1, 120), Shift(1), PowerTarget::exact(2));
    const auto r = max_clique(g);
    CHECK(r.size == 4);
    CHECK(r.exhaustive);
    CHECK(r.witness == std::vector<std::uint64_t>{1, 3, 8, 120});
    CHECK(max_clique(Graph{}).size == 0);
    const auto neg = max_clique(build_tuple_graph(integer_range(1, 300), Shift(-1), PowerTarget::exact(2)));
    CHECK(neg.size == 3);
    CHECK(verify_tuple(neg.witness, Shift(-1), PowerTarget::exact(2)).holds);
}

TEST_CASE("max_clique equals subset enumeration on random graphs with <= 20 vertices")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 21;
        const double density = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        const auto g = random_graph(n, density, rng);
        const auto want = oracle::max_clique_by_subsets(n, [&](std::size_t u, std::size_t v) { return g.adjacent(u, v); });
        const auto lex = oracle::max_clique_by_extension(n, [&](std::size_t u, std::size_t v) { return g.adjacent(u, v); });
        const auto got = max_clique(g);
        REQUIRE(got.size == want);
        CHECK(got.witness == labels_of(g, lex.second));
        const auto fast = max_clique(g, CliqueOptions{.lexicographic_witness = false});
        CHECK(fast.size == want);
        for (std::size_t i = 0; i < fast.witness.size(); ++i) {
            for (std::size_t j = i + 1; j < fast.witness.size(); ++j) {
                CHECK(g.adjacent(*g.index_of(fast.witness[i]), *g.index_of(fast.witness[j])));
            }
        }
        if (want > 0) {
            CHECK(find_clique(g, want).has_value());
            CHECK_FALSE(find_clique(g, want + 1).has_value());
        }
    }
}

TEST_CASE("colour filter searches one colour class")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = rng() % 16 + 2;
        Graph g(integer_range(1, n));
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (rng() % 3) g.add_edge(u, v, static_cast<std::uint32_t>(rng() % 2 + 2));
            }
        }
        const auto want = oracle::max_clique_by_subsets(n, [&](std::size_t u, std::size_t v) {
            return g.adjacent(u, v) && g.color(u, v) == 3;
        });
        CHECK(max_clique(g, CliqueOptions{.color = 3}).size == want);
    }
}

TEST_CASE("symmetry pruning keeps the clique number")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t half = rng() % 10 + 1;
        const std::size_t n = 2 * half;
        Graph g(integer_range(1, n));
        std::vector<std::size_t> sigma(n);
        for (std::size_t v = 0; v < n; ++v) sigma[v] = v ^ 1u;
        const double density = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        std::bernoulli_distribution edge(density);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                // decide each orbit {uv, sigma(u)sigma(v)} once
                const auto a = std::minmax(u, v);
                const auto b = std::minmax(sigma[u], sigma[v]);
                if (b < a || g.adjacent(u, v)) continue;
                if (edge(rng)) {
                    g.add_edge(u, v);
                    if (!g.adjacent(sigma[u], sigma[v])) g.add_edge(sigma[u], sigma[v]);
                }
            }
        }
        const auto want = oracle::max_clique_by_subsets(n, [&](std::size_t u, std::size_t v) { return g.adjacent(u, v); });
        CliqueOptions opts;
        opts.symmetry = sigma;
        opts.lexicographic_witness = false;
        CHECK(max_clique(g, opts).size == want);
    }
    Graph path(integer_range(1, 3));
    path.add_edge(0, 1);
    CliqueOptions bad;
    bad.symmetry = {2, 1, 0};  // swaps the ends; edge 0-1 maps to the non-edge 2-1
    CHECK_THROWS_AS(max_clique(path, bad), std::invalid_argument);
}

TEST_CASE("a tight timeout is flagged as non-exhaustive")
{
    std::mt19937_64 rng(1);
    const auto g = random_graph(220, 0.9, rng);
    CliqueOptions opts;
    opts.timeout = std::chrono::milliseconds(1);
    const auto r = max_clique(g, opts);
    CHECK_FALSE(r.exhaustive);
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        for (std::size_t j = i + 1; j < r.witness.size(); ++j) {
            CHECK(g.adjacent(*g.index_of(r.witness[i]), *g.index_of(r.witness[j])));
        }
    }
}

TEST_CASE("compute_f matches subset enumeration for x <= 12")
{
    CHECK(compute_f(3, false).value >= 2);
    for (std::uint64_t x = 1; x <= 12; ++x) {
        for (bool signed_shifts : {false, true}) {
            std::size_t want = 0;
            for (std::int64_t n = -static_cast<std::int64_t>(x); n <= static_cast<std::int64_t>(x); ++n) {
                if (n == 0 || (!signed_shifts && n < 0)) continue;
                const auto size = oracle::max_clique_by_subsets(x, [&](std::size_t i, std::size_t j) {
                    return oracle::is_any_power_by_scan(BigInt(i + 1) * (j + 1) + n);
                });
                want = std::max(want, size);
            }
            const auto f = compute_f(x, signed_shifts);
            CHECK(f.value == want);
            CHECK(f.exhaustive);
            CHECK(f.witness_set.size() == f.value);
            CHECK(verify_tuple(f.witness_set, Shift(f.witness_n), PowerTarget::any_for(x, Shift(f.witness_n))).holds);
        }
    }
    CHECK_THROWS_AS(compute_f(0, false), std::invalid_argument);
}

TEST_CASE("max_biclique_t")
{
    const auto small = max_biclique_t(integer_range(1, 50), integer_range(1, 50), Shift(1), 2, 2);
    CHECK(small.t >= 1);
    CHECK(verify_bipartite(small.a_side, small.b_side, Shift(1), 2).holds);
    const auto big = max_biclique_t(integer_range(1, 1000), integer_range(1, 1000), Shift(1), 2, 2);
    CHECK(big.t >= 2);
    CHECK(verify_bipartite(big.a_side, big.b_side, Shift(1), 2).holds);
    CHECK(verify_bipartite({1, 2}, {24, 840}, Shift(1), 2).holds);
    CHECK(max_biclique_t(integer_range(1, 30), integer_range(1, 30), Shift(1), 61, 2).t == 0);

    // brute force over every s-subset of a small range
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = static_cast<std::int64_t>(rng() % 9) - 4;
        if (n == 0) continue;
        const std::uint64_t hi = rng() % 25 + 5;
        const std::size_t s = rng() % 3 + 1;
        const auto range = integer_range(1, hi);
        const auto got = max_biclique_t(range, range, Shift(n), 2, s);
        std::size_t want = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << hi); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != s) continue;
            std::size_t t = 0;
            for (std::uint64_t b = 1; b <= hi; ++b) {
                bool ok = true;
                for (std::uint64_t a = 1; a <= hi && ok; ++a) {
                    if (mask >> (a - 1) & 1u) ok = oracle::is_power_by_scan(BigInt(a) * b + n, 2);
                }
                t += ok;
            }
            want = std::max(want, t);
        }
        CHECK(got.t == want);
    }
}

TEST_CASE("find_power_cycles")
{
    const auto cycles = find_power_cycles(1, 120, Shift(1), 2, 2);
    CHECK(std::find(cycles.begin(), cycles.end(), PowerCycle{1, 3, 8, 120}) != cycles.end());
    CHECK(find_power_cycles(1, 20, Shift(1), 7, 7).empty());
    CHECK(find_power_cycles(5, 4, Shift(1), 2, 2).empty());
    const auto mixed = find_power_cycles(1, 60, Shift(-1), 2, 3);
    for (const auto& c : mixed) {
        std::set<std::uint64_t> distinct(c.begin(), c.end());
        CHECK(distinct.size() == 4);
        CHECK(qualifies(c[0], c[1], Shift(-1), PowerTarget::exact(2)).qualifies());
        CHECK(qualifies(c[3], c[0], Shift(-1), PowerTarget::exact(2)).qualifies());
        CHECK(qualifies(c[1], c[2], Shift(-1), PowerTarget::exact(3)).qualifies());
        CHECK(qualifies(c[2], c[3], Shift(-1), PowerTarget::exact(3)).qualifies());
    }
    // count against a direct quadruple scan
    std::size_t want = 0;
    for (std::uint64_t a = 1; a <= 30; ++a)
        for (std::uint64_t b = 1; b <= 30; ++b)
            for (std::uint64_t c = 1; c <= 30; ++c)
                for (std::uint64_t d = 1; d <= 30; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    auto sq = [](std::uint64_t v) { return oracle::is_power_by_scan(BigInt(v), 2); };
                    want += sq(a * b + 1) && sq(d * a + 1) && sq(b * c + 1) && sq(c * d + 1);
                }
    CHECK(find_power_cycles(1, 30, Shift(1), 2, 2).size() == want);
}

TEST_CASE("pair_count_check")
{
    std::mt19937_64 rng(4);
    std::vector<std::uint64_t> set;
    while (set.size() < 300) {
        const std::uint64_t v = rng() % 9999 + 2;
        if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
    }
    for (std::int64_t n : {1, -1}) {
        for (unsigned k : {2u, 3u, 4u, 5u}) {
            const auto r = pair_count_check(set, Shift(n), k);
            CHECK(r.precondition_met);
            CHECK(r.report.holds());
            std::uint64_t want = 0;
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    want += qualifies(set[i], set[j], Shift(n), PowerTarget::exact(k)).qualifies();
            CHECK(r.count == want);
        }
    }
    CHECK(pair_count_check({5}, Shift(1), 2).count == 0);
    const auto r = pair_count_check({5, 7}, Shift(2), 2);
    CHECK_FALSE(r.precondition_met);
    CHECK(r.report.verdict == Verdict::NotApplicable);
}
