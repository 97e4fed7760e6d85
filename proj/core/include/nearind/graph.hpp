#ifndef NEARIND_GRAPH_HPP
#define NEARIND_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nearind {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Invalid graph construction or operation (bad endpoint, self-loop, order cap).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A set of vertex labels packed into one 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) noexcept { return VertexSet(std::uint64_t{1} << v); }
    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) noexcept {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const noexcept { return (bits_ >> v) & 1U; }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex first() const noexcept { return std::countr_zero(bits_); }

    constexpr VertexSet with(Vertex v) const noexcept { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(Vertex v) const noexcept { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }

    /// Complement relative to {0, ..., n-1}.
    constexpr VertexSet complement(int n) const noexcept { return range(n) - *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;

    /// Iterates members in increasing order.
    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
        constexpr Vertex operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is one neighbor bitmask per vertex. Every instance satisfies:
/// symmetric adjacency, no self-loops, no bits at or above position n.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;  // the empty graph (no vertices)

    /// Graph with exactly the listed edges; duplicates collapse.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph edgeless(int n);
    /// Validates the adjacency invariants before accepting the masks.
    static Graph from_adjacency(std::vector<std::uint64_t> adj);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    int size() const noexcept;
    VertexSet vertices() const noexcept { return VertexSet::range(order()); }

    VertexSet neighbors(Vertex v) const { return VertexSet(adj_.at(static_cast<std::size_t>(v))); }
    VertexSet closed_neighborhood(Vertex v) const { return neighbors(v).with(v); }
    int degree(Vertex v) const { return neighbors(v).size(); }
    int max_degree() const noexcept;
    bool has_edge(Vertex u, Vertex v) const;
    bool is_edgeless() const noexcept;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;
    std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}
    friend struct GraphAccess;  // unchecked construction inside the library

    std::vector<std::uint64_t> adj_;
};

Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between V(g) and V(h).
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Induced subgraph on V(g) \ removed, relabeled to 0..k-1 in increasing order.
Graph delete_vertices(const Graph& g, VertexSet removed);
Graph induced_subgraph(const Graph& g, VertexSet kept);

VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Exactly one component; the graph with no vertices is not connected.
bool is_connected(const Graph& g);

/// Relabels vertex v as perm[v]; `perm` must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Number of edges of `g` with both ends in `s`.
int induced_edge_count(const Graph& g, VertexSet s) noexcept;

}  // namespace nearind

template <>
struct std::hash<nearind::Graph> {
    std::size_t operator()(const nearind::Graph& g) const noexcept {
        std::size_t h = static_cast<std::size_t>(g.order()) * 0x9e3779b97f4a7c15ULL;
        for (auto m : g.adjacency()) {
            h ^= std::hash<std::uint64_t>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

#endif  // NEARIND_GRAPH_HPP
