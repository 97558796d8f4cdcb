#include "dtup/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace dtup {

namespace {

using boost::multiprecision::pow;

SubgraphMatch labelled(const Graph& g, const std::vector<std::size_t>& vertices)
{
    SubgraphMatch m;
    m.found = true;
    for (auto v : vertices) m.witness.push_back(g.label(v));
    return m;
}

bool extend_clique(const Graph& g, std::size_t r, const VertexSet& candidates, std::vector<std::size_t>& chosen)
{
    if (chosen.size() == r) return true;
    if (chosen.size() + candidates.count() < r) return false;
    for (std::size_t v = candidates.first(); v != VertexSet::npos; v = candidates.next(v + 1)) {
        VertexSet next = candidates & g.neighbors(v);
        next.clear_below(v + 1);
        chosen.push_back(v);
        if (extend_clique(g, r, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

bool extend_biclique(const Graph& g, std::size_t s, std::size_t t, std::size_t start, const VertexSet& common,
                     std::vector<std::size_t>& a_side)
{
    if (common.count() < t) return false;
    if (a_side.size() == s) return true;
    for (std::size_t v = start; v < g.size(); ++v) {
        VertexSet next = common & g.neighbors(v);
        a_side.push_back(v);
        if (extend_biclique(g, s, t, v + 1, next, a_side)) return true;
        a_side.pop_back();
    }
    return false;
}

SubgraphMatch find_complete(const Graph& g, std::size_t r)
{
    std::vector<std::size_t> chosen;
    if (r == 0) return SubgraphMatch{true, {}};
    if (extend_clique(g, r, VertexSet::full(g.size()), chosen)) return labelled(g, chosen);
    return {};
}

SubgraphMatch find_bipartite(const Graph& g, std::size_t s, std::size_t t)
{
    if (s == 0 || t == 0) throw std::invalid_argument("K_{s,t} pattern needs s, t >= 1");
    std::vector<std::size_t> a_side;
    if (!extend_biclique(g, s, t, 0, VertexSet::full(g.size()), a_side)) return {};
    // The common neighbourhood of A never meets A: the graph has no loops.
    VertexSet common = VertexSet::full(g.size());
    for (auto a : a_side) common &= g.neighbors(a);
    std::vector<std::size_t> vertices = a_side;
    for (std::size_t b = common.first(); b != VertexSet::npos && vertices.size() < s + t; b = common.next(b + 1)) {
        vertices.push_back(b);
    }
    return labelled(g, vertices);
}

SubgraphMatch find_colored_cycle(const Graph& g)
{
    for (std::size_t v1 = 0; v1 < g.size(); ++v1) {
        const auto& n1 = g.neighbors(v1);
        for (std::size_t v2 = n1.first(); v2 != VertexSet::npos; v2 = n1.next(v2 + 1)) {
            for (std::size_t v4 = n1.first(); v4 != VertexSet::npos; v4 = n1.next(v4 + 1)) {
                if (v4 == v2 || g.color(v1, v2) != g.color(v1, v4)) continue;
                const VertexSet mid = g.neighbors(v2) & g.neighbors(v4);
                for (std::size_t v3 = mid.first(); v3 != VertexSet::npos; v3 = mid.next(v3 + 1)) {
                    if (v3 == v1 || g.color(v2, v3) != g.color(v3, v4)) continue;
                    return labelled(g, {v1, v2, v3, v4});
                }
            }
        }
    }
    return {};
}

}  // namespace

TupleConstants constants(unsigned k)
{
    if (k < 3) throw std::invalid_argument("tuple constants are defined for k >= 3");
    switch (k) {
    case 3: return {3, 9, 6, BigRational(15399, 938)};
    case 4: return {4, 6, 4, BigRational(34, 3)};
    case 5: return {5, 5, 3, BigRational(97, 23)};
    case 6: return {6, 4, 2, BigRational(29, 4)};
    default: {
        const BigInt kk(k);
        return {k, 4, 2, BigRational(kk * kk + kk - 4, kk * kk - 6 * kk + 6)};
    }
    }
}

BigRational turan_bound(std::uint64_t n, std::uint64_t r)
{
    if (r < 2) throw std::invalid_argument("turan bound needs r >= 2");
    const BigInt nn(n);
    return BigRational(1, 2) * (BigRational(1) - BigRational(1, r - 1)) * BigRational(nn * nn);
}

double kst_bound(std::uint64_t n, std::uint64_t s, std::uint64_t t)
{
    if (s < 1 || s > t) throw std::invalid_argument("kst bound needs 1 <= s <= t");
    const double sd = static_cast<double>(s);
    const double nd = static_cast<double>(n);
    return std::pow(static_cast<double>(t - 1), 1.0 / sd) * std::pow(nd, 2.0 - 1.0 / sd) + (sd - 1.0) * nd;
}

double ordered_kst_bound(std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t t)
{
    if (n > m) throw std::invalid_argument("ordered kst bound needs n <= m");
    if (r < 1 || t < 1) throw std::invalid_argument("ordered kst bound needs r, t >= 1");
    const double rd = static_cast<double>(r);
    const double md = static_cast<double>(m);
    return 2.0 * std::pow(static_cast<double>(t - 1), 1.0 / rd) * md * std::pow(static_cast<double>(n), 1.0 - 1.0 / rd) +
           2.0 * (rd - 1.0) * md;
}

double colored_cycle_bound(std::uint64_t n, std::uint64_t kcolors)
{
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(kcolors);
    return std::sqrt(kd) * std::pow(nd, 1.5) + kd * nd;
}

double robust_size_bound(double delta, std::uint64_t s, std::uint64_t t)
{
    if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
    if (s > t) throw std::invalid_argument("robust size bound needs s <= t");
    const double sd = static_cast<double>(s);
    return std::pow(2.0 / delta, sd) * static_cast<double>(t - 1) + 2.0 * sd / delta;
}

bool turan_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t r)
{
    return BigRational(edges) <= turan_bound(n, r);
}

bool kst_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t s, std::uint64_t t)
{
    if (s < 1 || s > t) throw std::invalid_argument("kst bound needs 1 <= s <= t");
    const BigInt slack = BigInt(edges) - BigInt(s - 1) * n;
    if (slack <= 0) return true;
    const auto e = static_cast<unsigned>(s);
    return pow(slack, e) <= BigInt(t - 1) * pow(BigInt(n), 2 * e - 1);
}

bool ordered_kst_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t m, std::uint64_t r, std::uint64_t t)
{
    if (n > m) throw std::invalid_argument("ordered kst bound needs n <= m");
    if (r < 1 || t < 1) throw std::invalid_argument("ordered kst bound needs r, t >= 1");
    const BigInt slack = BigInt(edges) - 2 * BigInt(r - 1) * m;
    if (slack <= 0) return true;
    const auto e = static_cast<unsigned>(r);
    return pow(slack, e) <= pow(BigInt(2) * m, e) * BigInt(t - 1) * pow(BigInt(n), e - 1);
}

bool colored_cycle_admits(std::uint64_t edges, std::uint64_t n, std::uint64_t kcolors)
{
    const BigInt slack = BigInt(edges) - BigInt(kcolors) * n;
    if (slack <= 0) return true;
    return slack * slack <= BigInt(kcolors) * pow(BigInt(n), 3);
}

SubgraphMatch check_forbidden_subgraph(const Graph& g, const Pattern& pattern)
{
    return std::visit(
        [&g](const auto& p) -> SubgraphMatch {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CompletePattern>) return find_complete(g, p.r);
            else if constexpr (std::is_same_v<P, BipartitePattern>) return find_bipartite(g, p.s, p.t);
            else return find_colored_cycle(g);
        },
        pattern);
}

}  // namespace dtup
