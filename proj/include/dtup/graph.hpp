#pragma once

// Labelled simple graphs with optional edge colours, and an exact maximum
// clique engine (bitset branch-and-bound with greedy colouring bounds).

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

namespace dtup {

/// Fixed-capacity bitset over vertex indices.
class VertexSet {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet full(std::size_t capacity);

    std::size_t capacity() const noexcept { return capacity_; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    std::size_t first() const noexcept { return next(0); }
    /// First member >= from, or npos.
    std::size_t next(std::size_t from) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& and_not(const VertexSet& other) noexcept;
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Drops every member < from.
    void clear_below(std::size_t from) noexcept;

    std::vector<std::size_t> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Edge {
    std::size_t u;
    std::size_t v;
    std::uint32_t color;
};

/// Simple undirected graph on vertices labelled by strictly ascending
/// integers. Colour 0 means "no edge"; any other value is an edge colour.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::uint64_t> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    std::uint64_t label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::uint64_t>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::uint64_t label) const;

    void add_edge(std::size_t u, std::size_t v, std::uint32_t color = 1);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }
    std::uint32_t color(std::size_t u, std::size_t v) const;
    const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    std::set<std::uint32_t> colors() const;

    /// Same vertices, only the edges of one colour.
    Graph restrict_to_color(std::uint32_t color) const;

private:
    std::vector<std::uint64_t> labels_;
    std::vector<VertexSet> adj_;
    std::unordered_map<std::uint64_t, std::uint32_t> colors_;  // key: (min << 32) | max
    std::size_t edge_count_ = 0;
};

struct CliqueOptions {
    std::optional<std::chrono::milliseconds> timeout;
    std::optional<std::uint32_t> color;  // search inside one colour class
    bool lexicographic_witness = true;
    /// Optional involutive automorphism by vertex index, used to prune the
    /// top level. Checked against the searched graph; throws if it is not one.
    std::vector<std::size_t> symmetry;
};

struct CliqueResult {
    std::size_t size = 0;
    std::vector<std::uint64_t> witness;  // labels, ascending
    bool exhaustive = true;
};

/// Exact maximum clique. Among maximum cliques the witness is the
/// lexicographically smallest label sequence when requested.
CliqueResult max_clique(const Graph& g, const CliqueOptions& options = {});

/// Some clique of exactly `target` vertices (vertex indices, ascending), if one exists.
std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t target);

}  // namespace dtup
