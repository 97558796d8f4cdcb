#include "dtup/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <stdexcept>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace dtup {

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::full(std::size_t capacity)
{
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (capacity % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
    return s;
}

std::size_t VertexSet::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept
{
    for (auto w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::size_t VertexSet::next(std::size_t from) const noexcept
{
    if (from >= capacity_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
        if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi >= words_.size()) return npos;
        w = words_[wi];
    }
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::and_not(const VertexSet& other) noexcept
{
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

void VertexSet::clear_below(std::size_t from) noexcept
{
    const std::size_t wi = from >> 6;
    for (std::size_t i = 0; i < wi && i < words_.size(); ++i) words_[i] = 0;
    if (wi < words_.size()) words_[wi] &= ~std::uint64_t{0} << (from & 63);
}

std::vector<std::size_t> VertexSet::members() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = first(); i != npos; i = next(i + 1)) out.push_back(i);
    return out;
}

// -------------------------------------------------------------------- Graph

namespace {

std::uint64_t edge_key(std::size_t u, std::size_t v)
{
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

}  // namespace

Graph::Graph(std::vector<std::uint64_t> labels) : labels_(std::move(labels))
{
    for (std::size_t i = 1; i < labels_.size(); ++i) {
        if (labels_[i - 1] >= labels_[i]) throw std::invalid_argument("graph labels must be strictly ascending");
    }
    if (labels_.size() >= (std::size_t{1} << 32)) throw std::invalid_argument("graph too large");
    adj_.assign(labels_.size(), VertexSet(labels_.size()));
}

std::optional<std::size_t> Graph::index_of(std::uint64_t label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

void Graph::add_edge(std::size_t u, std::size_t v, std::uint32_t color)
{
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (color == 0) throw std::invalid_argument("edge colour 0 is reserved for non-edges");
    if (!adj_.at(u).test(v)) ++edge_count_;
    adj_.at(u).set(v);
    adj_.at(v).set(u);
    colors_[edge_key(u, v)] = color;
}

std::uint32_t Graph::color(std::size_t u, std::size_t v) const
{
    if (u == v) return 0;
    auto it = colors_.find(edge_key(u, v));
    return it == colors_.end() ? 0 : it->second;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1)) {
            out.push_back({u, v, color(u, v)});
        }
    }
    return out;
}

std::set<std::uint32_t> Graph::colors() const
{
    std::set<std::uint32_t> out;
    for (const auto& [key, c] : colors_) out.insert(c);
    return out;
}

Graph Graph::restrict_to_color(std::uint32_t color) const
{
    Graph g(labels_);
    for (const auto& e : edges()) {
        if (e.color == color) g.add_edge(e.u, e.v, e.color);
    }
    return g;
}

// ------------------------------------------------------------ clique engine

namespace {

// One word of a candidate set with its offset in the packed index.
struct MaskWord {
    std::uint32_t word;
    std::uint32_t shift;
    std::uint64_t mask;
};

// For each listed vertex, the bits of its row at the candidate positions,
// packed to the low end. The candidates number at most 64.
void compress_rows_portable(std::uint64_t* out, const std::uint64_t* rows, std::size_t stride,
                            const std::size_t* order, std::size_t n, const MaskWord* mw, std::size_t mwn)
{
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* r = rows + order[i] * stride;
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < mwn; ++k) {
            unsigned j = mw[k].shift;
            for (std::uint64_t m = mw[k].mask; m; m &= m - 1, ++j) {
                if (r[mw[k].word] & m & (~m + 1)) acc |= std::uint64_t{1} << j;
            }
        }
        out[i] = acc;
    }
}

#if defined(__x86_64__)
__attribute__((target("bmi2"))) void compress_rows_bmi2(std::uint64_t* out, const std::uint64_t* rows,
                                                        std::size_t stride, const std::size_t* order, std::size_t n,
                                                        const MaskWord* mw, std::size_t mwn)
{
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t* r = rows + order[i] * stride;
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < mwn; ++k) acc |= _pext_u64(r[mw[k].word], mw[k].mask) << mw[k].shift;
        out[i] = acc;
    }
}

const bool kHaveBmi2 = __builtin_cpu_supports("bmi2");
#endif

void compress_rows(std::uint64_t* out, const std::uint64_t* rows, std::size_t stride, const std::size_t* order,
                   std::size_t n, const MaskWord* mw, std::size_t mwn)
{
#if defined(__x86_64__)
    if (kHaveBmi2) return compress_rows_bmi2(out, rows, stride, order, n, mw, mwn);
#endif
    compress_rows_portable(out, rows, stride, order, n, mw, mwn);
}

class Deadline {
public:
    explicit Deadline(std::optional<std::chrono::milliseconds> budget)
    {
        if (budget) end_ = std::chrono::steady_clock::now() + *budget;
    }
    bool expired()
    {
        if (!end_ || expired_) return expired_;
        if (++ticks_ % 1024 != 0) return false;
        expired_ = std::chrono::steady_clock::now() >= *end_;
        return expired_;
    }
    bool was_expired() const { return expired_; }

private:
    std::optional<std::chrono::steady_clock::time_point> end_;
    std::uint64_t ticks_ = 0;
    bool expired_ = false;
};

// Vertices are renumbered into a smallest-last (degeneracy) order so that the
// greedy colouring bound is tight early. Candidate sets live in flat per-depth
// word buffers to keep the hot loop free of allocations. W is the number of
// 64-bit words per set when fixed at compile time, 0 when only known at run time.
template <std::size_t W>
class CliqueEngine {
public:
    CliqueEngine(const Graph& g, Deadline& deadline) : deadline_(deadline)
    {
        n_ = g.size();
        words_ = (n_ + 63) / 64;
        if (W != 0 && W != words_) throw std::logic_error("engine word count mismatch");
        uncoloured_.resize(words_);
        queue_.resize(words_);
        order_ = degeneracy_order(g);
        position_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) position_[order_[i]] = i;
        adj_.assign(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            const auto& nb = g.neighbors(order_[i]);
            for (std::size_t u = nb.first(); u != VertexSet::npos; u = nb.next(u + 1)) {
                const std::size_t j = position_[u];
                adj_[i * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
            }
        }
    }

    /// Involutive automorphism (original indices). Lets the root level drop
    /// the image of every vertex it has finished with.
    void set_symmetry(const std::vector<std::size_t>& sigma)
    {
        mirror_.assign(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) mirror_[i] = position_[sigma[order_[i]]];
    }

    VertexSet to_internal(const VertexSet& original) const
    {
        VertexSet s(n_);
        for (std::size_t u = original.first(); u != VertexSet::npos; u = original.next(u + 1)) s.set(position_[u]);
        return s;
    }

    /// Maximum clique within `candidates` (internal numbering), returned only
    /// if larger than floor_size. Stops early once `stop_at` vertices are
    /// found. Returned clique uses original indices.
    std::vector<std::size_t> search(const VertexSet& candidates, std::size_t floor_size, std::size_t stop_at,
                                    bool use_symmetry = false)
    {
        return search_words(candidates.words().data(), floor_size, stop_at, use_symmetry);
    }

private:
    template <std::size_t>
    friend class CliqueEngine;

    // Engine for subtrees whose candidates fit in one word; it works on a
    // compressed copy of the induced subgraph.
    explicit CliqueEngine(Deadline& deadline) : deadline_(deadline), words_(1), uncoloured_(1), queue_(1) {}

    std::vector<std::size_t> search_words(const std::uint64_t* candidates, std::size_t floor_size, std::size_t stop_at,
                                          bool use_symmetry)
    {
        use_symmetry_ = use_symmetry && !mirror_.empty();
        best_.clear();
        best_size_ = floor_size;
        stop_at_ = stop_at;
        done_ = false;
        current_.clear();
        top_ = 0;
        auto root = level(0);
        std::copy(candidates, candidates + nw(), root);
        expand(0);
        std::vector<std::size_t> out;
        for (auto v : best_) out.push_back(order_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::size_t nw() const
    {
        if constexpr (W != 0) return W;
        else return words_;
    }

    static std::vector<std::size_t> degeneracy_order(const Graph& g)
    {
        const std::size_t n = g.size();
        std::vector<std::size_t> degree(n);
        std::size_t max_degree = 0;
        for (std::size_t v = 0; v < n; ++v) {
            degree[v] = g.degree(v);
            max_degree = std::max(max_degree, degree[v]);
        }
        // Bucket queue; ties resolved by vertex index for determinism.
        std::vector<std::set<std::size_t>> buckets(max_degree + 1);
        for (std::size_t v = 0; v < n; ++v) buckets[degree[v]].insert(v);
        std::vector<bool> removed(n, false);
        std::vector<std::size_t> removal;
        removal.reserve(n);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t lo = 0;
            while (buckets[lo].empty()) ++lo;
            const std::size_t v = *buckets[lo].begin();
            buckets[lo].erase(buckets[lo].begin());
            removed[v] = true;
            removal.push_back(v);
            const auto& nb = g.neighbors(v);
            for (std::size_t u = nb.first(); u != VertexSet::npos; u = nb.next(u + 1)) {
                if (removed[u]) continue;
                buckets[degree[u]].erase(u);
                --degree[u];
                buckets[degree[u]].insert(u);
            }
        }
        // Smallest-last: the first vertex removed goes last.
        std::reverse(removal.begin(), removal.end());
        return removal;
    }

    // Pointers into levels_ are invalidated when a deeper level is first used.
    std::uint64_t* level(std::size_t depth)
    {
        const std::size_t need = (depth + 1) * nw();
        if (levels_.size() < need) levels_.resize(std::max(need, 2 * levels_.size()));
        return levels_.data() + depth * nw();
    }
    const std::uint64_t* row(std::size_t v) const { return adj_.data() + v * nw(); }

    static bool test(const std::uint64_t* s, std::size_t v) { return (s[v >> 6] >> (v & 63)) & 1u; }
    static void set(std::uint64_t* s, std::size_t v) { s[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static void reset(std::uint64_t* s, std::size_t v) { s[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    bool disjoint(const std::uint64_t* a, const std::uint64_t* b) const
    {
        for (std::size_t i = 0; i < nw(); ++i) {
            if (a[i] & b[i]) return false;
        }
        return true;
    }

    // Single member of a & b, npos when the intersection is empty, npos - 1
    // when it has two or more members.
    std::size_t sole_common(const std::uint64_t* a, const std::uint64_t* b) const
    {
        std::size_t found = VertexSet::npos;
        for (std::size_t i = 0; i < nw(); ++i) {
            std::uint64_t w = a[i] & b[i];
            if (!w) continue;
            if (found != VertexSet::npos || (w & (w - 1))) return VertexSet::npos - 1;
            found = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
        }
        return found;
    }

    void expand(std::size_t depth)
    {
        if (done_) return;
        if (deadline_.expired()) {
            done_ = true;
            return;
        }
        std::uint64_t* candidates = level(depth);
        const std::size_t base = top_;
        const std::size_t count = colour_sort(candidates, current_.size(), base);
        top_ = base + count;
        std::uint64_t* next = level(depth + 1);
        candidates = level(depth);  // level() may have reallocated
        const bool mirrored = use_symmetry_ && depth == 0;
        for (std::size_t i = count; i-- > 0;) {
            if (current_.size() + stack_colors_[base + i] <= best_size_) break;
            const std::size_t v = stack_verts_[base + i];
            if (mirrored && !test(candidates, v)) continue;
            current_.push_back(v);
            const std::uint64_t* r = row(v);
            bool any = false;
            for (std::size_t w = 0; w < nw(); ++w) {
                next[w] = candidates[w] & r[w];
                any |= next[w] != 0;
            }
            if (!any) {
                if (current_.size() > best_size_) {
                    best_ = current_;
                    best_size_ = current_.size();
                    if (best_size_ >= stop_at_) done_ = true;
                }
            } else if (W != 1 && fits_one_word(next)) {
                descend_small(next);
            } else {
                expand(depth + 1);
                candidates = level(depth);
                next = level(depth + 1);
            }
            current_.pop_back();
            reset(candidates, v);
            if (mirrored) reset(candidates, mirror_[v]);
            if (done_) break;
        }
        top_ = base;
    }

    bool fits_one_word(const std::uint64_t* s) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < nw(); ++i) c += static_cast<std::size_t>(std::popcount(s[i]));
        return c <= 64;
    }

    // Same search as expand(depth + 1), run on the one-word engine.
    void descend_small(const std::uint64_t* candidates)
    {
        if (!small_) small_.reset(new CliqueEngine<1>(deadline_));
        auto& s = *small_;
        s.order_.resize(64);
        std::array<MaskWord, 64> mw;
        std::size_t mwn = 0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < nw(); ++i) {
            if (!candidates[i]) continue;
            mw[mwn++] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n), candidates[i]};
            for (std::uint64_t w = candidates[i]; w; w &= w - 1) {
                s.order_[n++] = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
            }
        }
        s.order_.resize(n);
        s.n_ = n;
        s.words_ = 1;
        s.adj_.resize(n);
        compress_rows(s.adj_.data(), row(0), nw(), s.order_.data(), n, mw.data(), mwn);
        const std::size_t have = current_.size();
        const std::uint64_t all = s.n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n_) - 1;
        const auto found =
            s.search_words(&all, best_size_ > have ? best_size_ - have : 0, stop_at_ > have ? stop_at_ - have : 1, false);
        if (deadline_.was_expired()) done_ = true;
        if (found.empty()) return;
        best_ = current_;
        best_.insert(best_.end(), found.begin(), found.end());
        best_size_ = best_.size();
        if (best_size_ >= stop_at_) done_ = true;
    }

    // Greedy sequential colouring with recolouring of vertices that would
    // open a class >= kmin. Only vertices whose colour could still beat the
    // incumbent are emitted, in non-decreasing colour order, to the scratch
    // stacks from `base` on. Returns how many were emitted.
    std::size_t colour_sort(const std::uint64_t* candidates, std::size_t depth, std::size_t base)
    {
        const std::size_t kmin = best_size_ + 1 > depth ? best_size_ + 1 - depth : 1;
        std::uint64_t* uncoloured = uncoloured_.data();
        std::uint64_t* queue = queue_.data();
        std::copy(candidates, candidates + nw(), uncoloured);
        if (classes_.size() < kmin * nw()) classes_.resize(kmin * nw());
        std::fill_n(classes_.begin(), kmin * nw(), 0);
        // Bit c of live_ marks class c as still open to absorb and renumber.
        cw_ = (kmin + 63) >> 6;
        if (live_.size() < cw_) {
            live_.resize(cw_);
            fixed_.resize(cw_);
        }
        std::fill_n(live_.begin(), cw_, 0);
        for (std::size_t c = 1; c < kmin; ++c) set(live_.data(), c);
        auto cls = [&](std::size_t c) { return classes_.data() + (c - 1) * nw(); };

        std::size_t left = 0;
        for (std::size_t i = 0; i < nw(); ++i) left += static_cast<std::size_t>(std::popcount(candidates[i]));
        if (stack_verts_.size() < base + left) {
            stack_verts_.resize(2 * (base + left));
            stack_colors_.resize(2 * (base + left));
        }
        std::uint32_t* verts = stack_verts_.data() + base;
        std::uint32_t* colors = stack_colors_.data() + base;
        std::size_t emitted = 0;
        std::size_t k = 0;
        while (left > 0) {
            ++k;
            std::copy(uncoloured, uncoloured + nw(), queue);
            for (std::size_t wi = 0; wi < nw(); ++wi) {
                while (queue[wi]) {
                    const std::size_t v = (wi << 6) + static_cast<std::size_t>(std::countr_zero(queue[wi]));
                    reset(uncoloured, v);
                    --left;
                    const std::uint64_t* r = row(v);
                    for (std::size_t j = wi; j < nw(); ++j) queue[j] &= ~r[j];
                    reset(queue, v);
                    if (k < kmin) {
                        set(cls(k), v);
                    } else if (!(kmin >= 3 && (renumber(v, kmin, cls) || absorb(v, kmin, cls)))) {
                        verts[emitted] = static_cast<std::uint32_t>(v);
                        colors[emitted] = static_cast<std::uint32_t>(k);
                        ++emitted;
                    }
                }
            }
        }
        return emitted;
    }

    // Tries to fold v into the classes below kmin without raising the bound.
    // Fixing v and propagating forced choices (a class left with a single
    // neighbour of everything fixed so far) until some class runs dry gives
    // a set of classes that, together with v, hold at most one clique vertex
    // fewer than their count. Those classes are then spent.
    template <class Cls>
    bool absorb(std::size_t v, std::size_t kmin, Cls&& cls)
    {
        const std::uint64_t* rv = row(v);
        if (reduced_.size() < kmin * nw()) reduced_.resize(kmin * nw());
        auto red = [&](std::size_t c) { return reduced_.data() + (c - 1) * nw(); };
        std::uint64_t* live = live_.data();
        std::uint64_t* fixed = fixed_.data();
        for (std::size_t wi = 0; wi < cw_; ++wi) {
            for (std::uint64_t m = live[wi]; m; m &= m - 1) {
                const std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
                const std::uint64_t* cc = cls(c);
                std::uint64_t* r = red(c);
                bool any = false;
                for (std::size_t i = 0; i < nw(); ++i) {
                    r[i] = cc[i] & rv[i];
                    any |= r[i] != 0;
                }
                if (!any) {
                    set(cls(c), v);
                    return true;
                }
            }
        }
        std::fill_n(fixed, cw_, 0);
        for (;;) {
            std::size_t unit = 0;
            std::size_t w = VertexSet::npos;
            for (std::size_t wi = 0; wi < cw_ && unit == 0; ++wi) {
                for (std::uint64_t m = live[wi] & ~fixed[wi]; m; m &= m - 1) {
                    const std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
                    const std::size_t only = single_member(red(c));
                    if (only != VertexSet::npos) {
                        unit = c;
                        w = only;
                        break;
                    }
                }
            }
            if (unit == 0) return false;
            set(fixed, unit);
            const std::uint64_t* rw = row(w);
            for (std::size_t wi = 0; wi < cw_; ++wi) {
                for (std::uint64_t m = live[wi] & ~fixed[wi]; m; m &= m - 1) {
                    const std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
                    std::uint64_t* r = red(c);
                    bool any = false;
                    for (std::size_t i = 0; i < nw(); ++i) {
                        r[i] &= rw[i];
                        any |= r[i] != 0;
                    }
                    if (!any) {
                        reset(live, c);
                        for (std::size_t f = 0; f < cw_; ++f) live[f] &= ~fixed[f];
                        return true;
                    }
                }
            }
        }
    }

    std::size_t single_member(const std::uint64_t* s) const
    {
        std::size_t found = VertexSet::npos;
        for (std::size_t i = 0; i < nw(); ++i) {
            const std::uint64_t w = s[i];
            if (!w) continue;
            if (found != VertexSet::npos || (w & (w - 1))) return VertexSet::npos;
            found = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
        }
        return found;
    }

    template <class Cls>
    bool renumber(std::size_t v, std::size_t kmin, Cls&& cls)
    {
        const std::uint64_t* rv = row(v);
        const std::uint64_t* live = live_.data();
        for (std::size_t wi = 0; wi < cw_; ++wi) {
            for (std::uint64_t m = live[wi]; m; m &= m - 1) {
                const std::size_t c1 = (wi << 6) + static_cast<std::size_t>(std::countr_zero(m));
                if (c1 + 1 >= kmin) return false;
                const std::size_t w = sole_common(cls(c1), rv);
                if (w >= VertexSet::npos - 1) continue;
                const std::uint64_t* rw = row(w);
                // Live classes above c1.
                for (std::size_t wj = wi; wj < cw_; ++wj) {
                    std::uint64_t m2 = live[wj];
                    if (wj == wi) m2 &= ~(m ^ (m - 1));
                    for (; m2; m2 &= m2 - 1) {
                        const std::size_t c2 = (wj << 6) + static_cast<std::size_t>(std::countr_zero(m2));
                        if (!disjoint(cls(c2), rw)) continue;
                        reset(cls(c1), w);
                        set(cls(c1), v);
                        set(cls(c2), w);
                        return true;
                    }
                }
            }
        }
        return false;
    }

    Deadline& deadline_;
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> position_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> levels_;
    std::vector<std::uint32_t> stack_verts_;  // colour_sort output, one slice per depth
    std::vector<std::uint32_t> stack_colors_;
    std::size_t top_ = 0;
    std::vector<std::uint64_t> uncoloured_;
    std::vector<std::uint64_t> queue_;
    std::vector<std::uint64_t> classes_;
    std::vector<std::uint64_t> live_;
    std::vector<std::uint64_t> fixed_;
    std::size_t cw_ = 0;
    std::vector<std::uint64_t> reduced_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> mirror_;
    std::unique_ptr<CliqueEngine<1>> small_;
    bool use_symmetry_ = false;
    std::size_t best_size_ = 0;
    std::size_t stop_at_ = 0;
    bool done_ = false;
};

void check_symmetry(const Graph& g, const std::vector<std::size_t>& sigma)
{
    const std::size_t n = g.size();
    if (sigma.size() != n) throw std::invalid_argument("symmetry must map every vertex");
    for (std::size_t v = 0; v < n; ++v) {
        if (sigma[v] >= n || sigma[sigma[v]] != v) throw std::invalid_argument("symmetry must be an involution");
    }
    for (const auto& e : g.edges()) {
        if (!g.adjacent(sigma[e.u], sigma[e.v])) throw std::invalid_argument("symmetry is not a graph automorphism");
    }
}

// Runs f on an engine specialised for the graph's word count.
template <class F>
auto with_engine(const Graph& g, Deadline& deadline, F&& f)
{
    switch ((g.size() + 63) / 64) {
    case 1: { CliqueEngine<1> e(g, deadline); return f(e); }
    case 2: { CliqueEngine<2> e(g, deadline); return f(e); }
    case 3: { CliqueEngine<3> e(g, deadline); return f(e); }
    case 4: { CliqueEngine<4> e(g, deadline); return f(e); }
    case 5: { CliqueEngine<5> e(g, deadline); return f(e); }
    case 6: { CliqueEngine<6> e(g, deadline); return f(e); }
    case 7: { CliqueEngine<7> e(g, deadline); return f(e); }
    case 8: { CliqueEngine<8> e(g, deadline); return f(e); }
    default: { CliqueEngine<0> e(g, deadline); return f(e); }
    }
}

template <class Engine>
CliqueResult run_max_clique(Engine& engine, const Graph& g, Deadline& deadline, const CliqueOptions& options)
{
    CliqueResult result;
    const std::size_t n = g.size();
    if (!options.symmetry.empty()) {
        check_symmetry(g, options.symmetry);
        engine.set_symmetry(options.symmetry);
    }
    auto best = engine.search(VertexSet::full(n), 0, n + 1, true);
    if (deadline.was_expired()) {
        result.exhaustive = false;
        if (best.empty()) best.push_back(0);
        result.size = best.size();
        for (auto v : best) result.witness.push_back(g.label(v));
        return result;
    }
    const std::size_t omega = best.size();

    if (options.lexicographic_witness && omega >= 1) {
        // Fix the smallest feasible vertex at each position.
        std::vector<std::size_t> chosen;
        VertexSet pool = VertexSet::full(n);
        for (std::size_t pos = 0; pos < omega; ++pos) {
            const std::size_t need = omega - pos - 1;
            bool placed = false;
            for (std::size_t v = pool.first(); v != VertexSet::npos; v = pool.next(v + 1)) {
                VertexSet rest = pool & g.neighbors(v);
                rest.clear_below(v + 1);
                if (need > 0) {
                    if (rest.count() < need) continue;
                    auto found = engine.search(engine.to_internal(rest), need - 1, need);
                    if (deadline.was_expired()) break;
                    if (found.size() < need) continue;
                }
                chosen.push_back(v);
                pool = std::move(rest);
                placed = true;
                break;
            }
            if (!placed) break;
        }
        if (chosen.size() == omega) {
            best = std::move(chosen);
        } else {
            result.exhaustive = false;  // size is exact, tie-break incomplete
        }
    }

    result.size = omega;
    for (auto v : best) result.witness.push_back(g.label(v));
    return result;
}

}  // namespace

CliqueResult max_clique(const Graph& input, const CliqueOptions& options)
{
    const Graph filtered = options.color ? input.restrict_to_color(*options.color) : Graph{};
    const Graph& g = options.color ? filtered : input;
    if (g.size() == 0) return {};
    Deadline deadline(options.timeout);
    return with_engine(g, deadline, [&](auto& engine) { return run_max_clique(engine, g, deadline, options); });
}

std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t target)
{
    if (target == 0) return std::vector<std::size_t>{};
    if (g.size() < target) return std::nullopt;
    Deadline deadline(std::nullopt);
    auto found = with_engine(g, deadline,
                             [&](auto& engine) { return engine.search(VertexSet::full(g.size()), target - 1, target); });
    if (found.size() < target) return std::nullopt;
    found.resize(target);
    return found;
}

}  // namespace dtup
