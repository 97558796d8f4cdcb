#include "dtup/conjectures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace dtup {

namespace {

// ------------------------------------------------------------- power sums

std::vector<u128> power_table(unsigned k, std::uint64_t H, unsigned max_terms)
{
    std::vector<u128> pw(H + 1, 0);
    const auto top = checked_pow(H, k);
    if (!top || *top > (~u128{0}) / std::max(1u, max_terms)) {
        throw std::invalid_argument("power sums exceed 128 bits; lower H or k");
    }
    for (std::uint64_t a = 1; a <= H; ++a) pw[a] = *checked_pow(a, k);
    return pw;
}

BigInt binomial(std::uint64_t n, std::uint64_t r)
{
    if (r > n) return 0;
    BigInt out = 1;
    for (std::uint64_t i = 0; i < r; ++i) out = out * (n - i) / (i + 1);
    return out;
}

struct SideSum {
    u128 sum;
    std::uint32_t offset;  // into the flat value store
    std::uint8_t size;
};

// Ascending selections of `size` values from [1, H]; repeats allowed when
// `multiset` is set.
void enumerate_sides(std::uint64_t H, unsigned size, bool multiset, const std::vector<u128>& pw,
                     std::vector<SideSum>& sums, std::vector<std::uint64_t>& store)
{
    std::vector<std::uint64_t> pick(size);
    auto rec = [&](auto&& self, unsigned pos, std::uint64_t from, u128 acc) -> void {
        if (pos == size) {
            sums.push_back({acc, static_cast<std::uint32_t>(store.size()), static_cast<std::uint8_t>(size)});
            store.insert(store.end(), pick.begin(), pick.end());
            return;
        }
        for (std::uint64_t a = from; a <= H; ++a) {
            pick[pos] = a;
            self(self, pos + 1, multiset ? a : a + 1, acc + pw[a]);
        }
    };
    rec(rec, 0, 1, 0);
}

std::vector<std::uint64_t> side_values(const SideSum& s, const std::vector<std::uint64_t>& store)
{
    return {store.begin() + s.offset, store.begin() + s.offset + s.size};
}

bool value_disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

template <class Accept>
std::vector<PowerSumSolution> collide(unsigned k, std::vector<SideSum>& sums, const std::vector<std::uint64_t>& store,
                                      Accept&& accept)
{
    std::stable_sort(sums.begin(), sums.end(), [](const SideSum& a, const SideSum& b) { return a.sum < b.sum; });
    std::vector<PowerSumSolution> out;
    for (std::size_t lo = 0; lo < sums.size();) {
        std::size_t hi = lo + 1;
        while (hi < sums.size() && sums[hi].sum == sums[lo].sum) ++hi;
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::size_t j = i + 1; j < hi; ++j) {
                if (!accept(sums[i].size, sums[j].size)) continue;
                auto a = side_values(sums[i], store);
                auto b = side_values(sums[j], store);
                if (!value_disjoint(a, b)) continue;
                if (b < a) std::swap(a, b);
                out.push_back({k, std::move(a), std::move(b), BigInt(to_string(sums[lo].sum))});
            }
        }
        lo = hi;
    }
    std::sort(out.begin(), out.end(), [](const PowerSumSolution& x, const PowerSumSolution& y) {
        if (x.value != y.value) return x.value < y.value;
        if (x.left != y.left) return x.left < y.left;
        return x.right < y.right;
    });
    return out;
}

// --------------------------------------------------------- Leibniz factors

struct Matching {
    std::vector<std::uint8_t> cells;  // 4 * row + col
    CellMask mask = 0;
};

const std::array<std::vector<Matching>, 5>& matchings()
{
    static const auto table = [] {
        std::array<std::vector<Matching>, 5> t;
        for (unsigned rows = 0; rows < 16; ++rows) {
            for (unsigned cols = 0; cols < 16; ++cols) {
                const auto i = static_cast<unsigned>(std::popcount(rows));
                if (i == 0 || std::popcount(cols) != static_cast<int>(i)) continue;
                std::vector<std::uint8_t> r;
                std::vector<std::uint8_t> c;
                for (std::uint8_t b = 0; b < 4; ++b) {
                    if (rows >> b & 1u) r.push_back(b);
                    if (cols >> b & 1u) c.push_back(b);
                }
                do {
                    Matching m;
                    for (std::size_t q = 0; q < i; ++q) {
                        const auto cell = static_cast<std::uint8_t>(4 * r[q] + c[q]);
                        m.cells.push_back(cell);
                        m.mask = static_cast<CellMask>(m.mask | (1u << cell));
                    }
                    t[i].push_back(std::move(m));
                } while (std::next_permutation(c.begin(), c.end()));
            }
        }
        return t;
    }();
    return table;
}

void require_entries(const QuadMatrix& m, CellMask known)
{
    for (unsigned cell = 0; cell < 16; ++cell) {
        if (!(known >> cell & 1u)) continue;
        const auto v = m[cell / 4][cell % 4];
        if (v < 1 || v > 0xFFFFFFFFull) throw std::invalid_argument("matrix entries must lie in [1, 2^32)");
    }
}

// ---------------------------------------------------------------- greedy

struct FractionHash {
    std::size_t operator()(const std::pair<u128, u128>& f) const noexcept
    {
        const auto mix = [](u128 v) {
            return static_cast<std::uint64_t>(v) * 0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(v >> 64);
        };
        return static_cast<std::size_t>(mix(f.first) * 31 + mix(f.second));
    }
};

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::pair<u128, u128> reduced(u128 num, u128 den)
{
    const u128 g = gcd128(num, den);
    return {num / g, den / g};
}

struct Ledger {
    std::unordered_set<std::pair<u128, u128>, FractionHash> quotients;
    FactorLedger sizes;
};

Ledger build_ledger(const QuadMatrix& m, CellMask known)
{
    std::vector<u128> factors;
    for (unsigned i = 1; i <= 4; ++i) {
        for (auto f : leibniz_factors(m, i, known)) factors.push_back(f);
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());

    Ledger ledger;
    ledger.sizes.factor_count = factors.size();
    if (std::find(factors.begin(), factors.end(), u128{1}) == factors.end()) factors.push_back(1);
    ledger.quotients.reserve(factors.size() * factors.size());
    std::unordered_set<std::pair<u128, u128>, FractionHash> above_one;
    for (auto a : factors) {
        for (auto b : factors) {
            const auto q = reduced(a, b);
            ledger.quotients.insert(q);
        }
    }
    for (const auto& q : ledger.quotients) {
        if (q.first > q.second) ++ledger.sizes.quotients_above_one;
    }
    return ledger;
}

CellMask known_cells(unsigned c_rows)
{
    CellMask mask = 0;
    for (unsigned r = 0; r < 4; ++r) {
        mask = static_cast<CellMask>(mask | (1u << (4 * r)) | (1u << (4 * r + 1)));
        if (r < c_rows) mask = static_cast<CellMask>(mask | (1u << (4 * r + 2)) | (1u << (4 * r + 3)));
    }
    return mask;
}

}  // namespace

std::vector<PowerSumSolution> equal_power_sums(unsigned k, unsigned max_terms, std::uint64_t H)
{
    if (k < 2) throw std::invalid_argument("power sums need k >= 2");
    if (H < 1) throw std::invalid_argument("height bound must be >= 1");
    if (max_terms < 1 || max_terms > 255) throw std::invalid_argument("terms per side must lie in [1, 255]");
    BigInt stored = 0;
    for (unsigned s = 1; s <= max_terms; ++s) stored += binomial(H, s);
    if (stored > kMaxStoredSums) throw std::length_error("power sum search exceeds the stored-sum limit");

    const auto pw = power_table(k, H, max_terms);
    std::vector<SideSum> sums;
    std::vector<std::uint64_t> store;
    for (unsigned s = 1; s <= max_terms; ++s) enumerate_sides(H, s, false, pw, sums, store);
    return collide(k, sums, store, [](unsigned, unsigned) { return true; });
}

LpsReport lps_desk_check(unsigned k, std::uint64_t H)
{
    if (k < 2) throw std::invalid_argument("lps check needs k >= 2");
    if (H < 1) throw std::invalid_argument("height bound must be >= 1");
    LpsReport report;
    report.k = k;
    report.H = H;
    if (k < 3) return report;  // m + n < k leaves no room for two nonempty sides
    const unsigned max_side = k - 2;
    BigInt stored = 0;
    for (unsigned s = 1; s <= max_side; ++s) stored += binomial(H + s - 1, s);
    if (stored > kMaxStoredSums) throw std::length_error("lps search exceeds the stored-sum limit");

    const auto pw = power_table(k, H, max_side);
    std::vector<SideSum> sums;
    std::vector<std::uint64_t> store;
    for (unsigned s = 1; s <= max_side; ++s) enumerate_sides(H, s, true, pw, sums, store);
    report.side_sums_checked = sums.size();
    report.violations = collide(k, sums, store, [k](unsigned m, unsigned n) { return m + n < k; });
    return report;
}

IntMatrix4 value_matrix(std::uint64_t u, std::uint64_t v, const Shift& n, const std::array<std::int64_t, 4>& b,
                        const std::array<std::int64_t, 4>& c)
{
    if (u < 1 || u >= v) throw std::invalid_argument("value matrix needs 1 <= u < v");
    IntMatrix4 m;
    const BigInt bu(u);
    const BigInt bv(v);
    const BigInt bn(n.value());
    for (std::size_t i = 0; i < 4; ++i) {
        m[i][0] = bu * b[i] + bn;
        m[i][1] = bv * b[i] + bn;
        m[i][2] = bu * c[i] + bn;
        m[i][3] = bv * c[i] + bn;
    }
    return m;
}

SingularReport singular_check(const IntMatrix4& input)
{
    IntMatrix4 m = input;
    BigInt sign = 1;
    BigInt prev = 1;
    SingularReport out;
    for (std::size_t k = 0; k < 3; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < 4 && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == 4) {
                out.det = 0;
                out.singular = true;
                return out;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 4; ++i) {
            for (std::size_t j = k + 1; j < 4; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    out.det = sign * m[3][3];
    out.singular = out.det == 0;
    return out;
}

std::vector<u128> leibniz_factors(const QuadMatrix& m, unsigned i, CellMask known)
{
    if (i < 1 || i > 4) throw std::invalid_argument("factor size must lie in [1, 4]");
    require_entries(m, known);
    std::vector<u128> out;
    for (const auto& match : matchings()[i]) {
        if ((match.mask & known) != match.mask) continue;
        u128 product = 1;
        for (auto cell : match.cells) product *= m[cell / 4][cell % 4];
        out.push_back(product);
    }
    return out;
}

StreamExhausted::StreamExhausted(GreedyProgress progress)
    : std::runtime_error("stream exhausted in stage " + progress.stage + " after " + std::to_string(progress.picks.size()) +
                         " picks"),
      progress_(std::move(progress))
{
}

GreedyResult greedy_distinct_rows(const std::vector<StreamRow>& stream)
{
    for (std::size_t i = 0; i < stream.size(); ++i) {
        const auto& r = stream[i];
        if (r.first < 1 || r.second < 1 || r.first > 0xFFFFFFFFull || r.second > 0xFFFFFFFFull) {
            throw std::invalid_argument("stream values must lie in [1, 2^32)");
        }
        if (i > 0 && stream[i - 1].element >= r.element) throw std::invalid_argument("stream elements must increase");
    }

    GreedyResult result;
    GreedyProgress progress{"b", {}, 0};
    std::size_t next = 0;
    auto exhausted = [&] {
        progress.rows_consumed = next;
        throw StreamExhausted(progress);
    };

    for (std::size_t j = 0; j < 4; ++j) {
        for (;; ++next) {
            if (next >= stream.size()) exhausted();
            bool ok = true;
            for (std::size_t i = 0; i < j; ++i) ok &= stream[next].first != result.matrix[i][1];
            if (ok) break;
        }
        result.b_picks[j] = next;
        result.matrix[j][0] = stream[next].first;
        result.matrix[j][1] = stream[next].second;
        progress.picks.push_back(next);
        ++next;
    }

    progress.stage = "c";
    for (std::size_t j = 0; j < 4; ++j) {
        const Ledger ledger = build_ledger(result.matrix, known_cells(static_cast<unsigned>(j)));
        result.ledgers[j] = ledger.sizes;
        const auto& q = ledger.quotients;
        for (;; ++next) {
            if (next >= stream.size()) exhausted();
            const u128 z = stream[next].first;
            const u128 w = stream[next].second;
            if (q.count({z, 1}) || q.count({w, 1}) || q.count(reduced(w, z))) continue;
            break;
        }
        result.c_picks[j] = next;
        result.matrix[j][2] = stream[next].first;
        result.matrix[j][3] = stream[next].second;
        progress.picks.push_back(next);
        ++next;
    }
    result.rows_consumed = next;

    for (unsigned i = 1; i <= 4; ++i) {
        auto f = leibniz_factors(result.matrix, i);
        std::sort(f.begin(), f.end());
        result.distinct_by_size[i - 1] = std::adjacent_find(f.begin(), f.end()) == f.end();
    }
    return result;
}

std::vector<StreamRow> synthetic_stream(StreamKind kind, std::uint64_t seed, std::size_t length, std::uint64_t lo,
                                        std::uint64_t hi)
{
    if (lo < 1 || lo > hi || hi > 0xFFFFFFFFull) throw std::invalid_argument("stream bounds must satisfy 1 <= lo <= hi < 2^32");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> draw(lo, hi);
    std::vector<StreamRow> rows;
    rows.reserve(length);
    if (kind == StreamKind::Uniform) {
        for (std::size_t i = 0; i < length; ++i) rows.push_back({i + 1, draw(rng), draw(rng)});
        return rows;
    }
    // Rows mimic a genuine stream: x < y, both increasing, x / y strictly
    // increasing. Each ratio step is about 1 / y, so y grows fast enough for
    // the ratio to stay well below 1.
    std::uniform_int_distribution<std::uint64_t> step(8, 64);
    std::uint64_t x = lo;
    std::uint64_t y = lo + step(rng);
    for (std::size_t i = 0; i < length; ++i) {
        if (i > 0) {
            const std::uint64_t y2 = y + step(rng);
            // smallest x2 with x2 / y2 > x / y
            x = static_cast<std::uint64_t>(static_cast<u128>(x) * y2 / y) + 1;
            y = y2;
        }
        if (y > hi) throw std::invalid_argument("monotone stream left [lo, hi]; raise hi or shorten it");
        if (x >= y) throw std::invalid_argument("monotone stream ratio reached 1; shorten it");
        rows.push_back({i + 1, x, y});
    }
    return rows;
}

std::vector<StreamRow> genuine_stream(std::uint64_t u, std::uint64_t v, const Shift& n, unsigned k, std::uint64_t x_limit,
                                      std::size_t max_rows)
{
    if (u < 1 || u >= v) throw std::invalid_argument("stream needs 1 <= u < v");
    if (k < 2) throw std::invalid_argument("stream needs k >= 2");
    std::vector<StreamRow> rows;
    for (std::uint64_t x = 1; x <= x_limit && rows.size() < max_rows; ++x) {
        const auto xk = checked_pow(x, k);
        if (!xk || *xk > (u128{1} << 100)) break;
        const i128 shifted = static_cast<i128>(*xk) - n.value();
        if (shifted <= 0 || shifted % u != 0) continue;
        const i128 t = shifted / u;
        if (t > static_cast<i128>(kMaxElement)) break;
        const i128 yk = static_cast<i128>(v) * t + n.value();
        if (yk <= 0) continue;
        const auto y = is_kth_power(static_cast<u128>(yk), k);
        if (!y || *y > 0xFFFFFFFFu || x > 0xFFFFFFFFu) continue;
        rows.push_back({static_cast<std::uint64_t>(t), x, static_cast<std::uint64_t>(*y)});
    }
    return rows;
}

RatioMonotonicity ratio_monotone(std::uint64_t u, std::uint64_t v, const Shift& n, std::uint64_t lo, std::uint64_t hi)
{
    RatioMonotonicity out;
    bool have_prev = false;
    BigInt prev_num;
    BigInt prev_den;
    const BigInt bn(n.value());
    for (std::uint64_t t = lo; t <= hi; ++t) {
        const BigInt num = BigInt(u) * t + bn;
        const BigInt den = BigInt(v) * t + bn;
        if (den <= 0) {
            if (t == hi) break;
            continue;
        }
        ++out.points;
        if (have_prev) {
            // den and prev_den are positive, so the comparison is order-preserving.
            const BigInt lhs = num * prev_den;
            const BigInt rhs = prev_num * den;
            const int step = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
            if (step == 0 || (out.direction != 0 && step != out.direction)) out.monotone = false;
            if (out.direction == 0) out.direction = step;
        }
        prev_num = num;
        prev_den = den;
        have_prev = true;
        if (t == hi) break;
    }
    return out;
}

}  // namespace dtup
