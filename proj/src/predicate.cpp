#include "dtup/predicate.hpp"

#include <algorithm>

namespace dtup {

PowerTarget PowerTarget::exact(unsigned k)
{
    if (k < 2) throw std::invalid_argument("exact power target needs k >= 2");
    return PowerTarget(ExactK{k});
}

PowerTarget PowerTarget::up_to(unsigned d)
{
    if (d < 2) throw std::invalid_argument("V_d target needs d >= 2");
    return PowerTarget(UpToD{d});
}

PowerTarget PowerTarget::any(ExponentCap cap) { return PowerTarget(AnyPower{cap}); }

PowerTarget PowerTarget::any_for(std::uint64_t max_element, const Shift& n)
{
    const u128 top = u128{max_element} * max_element + n.magnitude();
    return any(ExponentCap(std::max(2u, floor_log2(top))));
}

std::string PowerTarget::describe() const
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExactK>) return "exact:" + std::to_string(v.k);
            else if constexpr (std::is_same_v<T, UpToD>) return "upto:" + std::to_string(v.d);
            else return "any:" + std::to_string(v.cap.value());
        },
        kind_);
}

std::optional<unsigned> qualifying_exponent(i128 value, const PowerTarget& target)
{
    if (value <= 0) return std::nullopt;
    const auto m = static_cast<u128>(value);
    return std::visit(
        [m](const auto& v) -> std::optional<unsigned> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ExactK>) {
                if (is_kth_power(m, v.k)) return v.k;
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, UpToD>) {
                return smallest_power_exponent(m, ExponentCap(v.d));
            } else {
                return smallest_power_exponent(m, v.cap);
            }
        },
        target.kind());
}

PairWitness qualifies(std::uint64_t a, std::uint64_t b, const Shift& n, const PowerTarget& target)
{
    if (a == 0 || b == 0) throw std::invalid_argument("tuple elements must be >= 1");
    if (a > kMaxElement || b > kMaxElement) throw std::invalid_argument("tuple element exceeds 2^63 - 1");
    PairWitness w;
    w.a = std::min(a, b);
    w.b = std::max(a, b);
    w.product_plus_n = static_cast<i128>(a) * static_cast<i128>(b) + n.value();
    w.exponent = qualifying_exponent(w.product_plus_n, target);
    if (w.exponent) w.root = ikroot(static_cast<u128>(w.product_plus_n), *w.exponent);
    return w;
}

std::vector<std::uint64_t> normalize_set(std::vector<std::uint64_t> set)
{
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw std::invalid_argument("set elements must be distinct");
    if (!set.empty() && set.front() == 0) throw std::invalid_argument("set elements must be positive");
    if (!set.empty() && set.back() > kMaxElement) throw std::invalid_argument("set element exceeds 2^63 - 1");
    return set;
}

TupleReport verify_tuple(std::vector<std::uint64_t> set, const Shift& n, const PowerTarget& target)
{
    set = normalize_set(std::move(set));
    TupleReport report;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            auto w = qualifies(set[i], set[j], n, target);
            if (w.qualifies()) {
                report.witnesses.push_back(w);
            } else {
                report.holds = false;
                report.failures.push_back(w);
            }
        }
    }
    return report;
}

BipartiteReport verify_bipartite(std::vector<std::uint64_t> a_set, std::vector<std::uint64_t> b_set, const Shift& n,
                                 unsigned k)
{
    a_set = normalize_set(std::move(a_set));
    b_set = normalize_set(std::move(b_set));
    const auto target = PowerTarget::exact(k);
    BipartiteReport report;
    report.degenerate = a_set.size() < 2 || b_set.size() < 2;
    for (auto a : a_set) {
        for (auto b : b_set) {
            auto w = qualifies(a, b, n, target);
            // Keep the (a, b) orientation for bipartite reporting.
            w.a = a;
            w.b = b;
            if (w.qualifies()) {
                report.witnesses.push_back(w);
            } else {
                report.holds = false;
                report.failures.push_back(w);
            }
        }
    }
    return report;
}

RobustCount robust_pair_count(std::vector<std::uint64_t> set, const Shift& n, unsigned k)
{
    set = normalize_set(std::move(set));
    if (set.size() < 2) throw std::invalid_argument("robust pair count needs |X| >= 2");
    const auto target = PowerTarget::exact(k);
    RobustCount rc;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (qualifies(set[i], set[j], n, target).qualifies()) ++rc.count;
        }
    }
    rc.pairs = static_cast<std::uint64_t>(set.size()) * (set.size() - 1) / 2;
    rc.delta = BigRational(rc.count, rc.pairs);
    return rc;
}

}  // namespace dtup
