#include "nearind/graph.hpp"

#include <algorithm>
#include <string>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace nearind {

struct GraphAccess {
    static Graph make(std::vector<std::uint64_t> adj) { return Graph(std::move(adj)); }
};

namespace {

void check_order(int n) {
    if (n < 0 || n > Graph::kMaxOrder) {
        throw GraphError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

// Packs the bits of `value` selected by `mask` into the low bits, in order.
std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask) noexcept {
#if defined(__BMI2__)
    return _pext_u64(value, mask);
#else
    std::uint64_t out = 0;
    int pos = 0;
    for (; mask != 0; mask &= mask - 1, ++pos) {
        if (value & mask & (~mask + 1)) out |= std::uint64_t{1} << pos;
    }
    return out;
#endif
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
    check_order(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw GraphError("self-loop at vertex " + std::to_string(u));
        }
        adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return Graph(std::move(adj));
}

Graph Graph::edgeless(int n) {
    check_order(n);
    return Graph(std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        const std::uint64_t m = adj[static_cast<std::size_t>(v)];
        if (m & ~all) throw GraphError("adjacency mask of vertex " + std::to_string(v) + " has bits beyond n");
        if ((m >> v) & 1U) throw GraphError("self-loop at vertex " + std::to_string(v));
        for (Vertex u : VertexSet(m)) {
            if (!((adj[static_cast<std::size_t>(u)] >> v) & 1U)) {
                throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                 std::to_string(v));
            }
        }
    }
    return Graph(std::move(adj));
}

int Graph::size() const noexcept {
    int twice = 0;
    for (auto m : adj_) twice += std::popcount(m);
    return twice / 2;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (auto m : adj_) best = std::max(best, std::popcount(m));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw GraphError("vertex out of range in has_edge");
    }
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
}

bool Graph::is_edgeless() const noexcept {
    return std::all_of(adj_.begin(), adj_.end(), [](std::uint64_t m) { return m == 0; });
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (Vertex v : VertexSet(adj_[static_cast<std::size_t>(u)] & ~VertexSet::range(u + 1).bits())) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > Graph::kMaxOrder) {
        throw GraphError("disjoint union would have " + std::to_string(n) + " vertices (cap 64)");
    }
    std::vector<std::uint64_t> adj(g.adjacency().begin(), g.adjacency().end());
    for (auto m : h.adjacency()) adj.push_back(m << g.order());
    return GraphAccess::make(std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > Graph::kMaxOrder) {
        throw GraphError("join would have " + std::to_string(n) + " vertices (cap 64)");
    }
    const std::uint64_t g_side = VertexSet::range(g.order()).bits();
    const std::uint64_t h_side = VertexSet::range(n).bits() & ~g_side;
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (auto m : g.adjacency()) adj.push_back(m | h_side);
    for (auto m : h.adjacency()) adj.push_back((m << g.order()) | g_side);
    return GraphAccess::make(std::move(adj));
}

Graph complement(const Graph& g) {
    const std::uint64_t all = g.vertices().bits();
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        adj.push_back(all & ~g.adjacency()[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v));
    }
    return GraphAccess::make(std::move(adj));
}

Graph induced_subgraph(const Graph& g, VertexSet kept) {
    kept &= g.vertices();
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(kept.size()));
    for (Vertex v : kept) {
        adj.push_back(extract_bits(g.adjacency()[static_cast<std::size_t>(v)], kept.bits()));
    }
    return GraphAccess::make(std::move(adj));
}

Graph delete_vertices(const Graph& g, VertexSet removed) {
    return induced_subgraph(g, g.vertices() - removed);
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    return g.closed_neighborhood(v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp = VertexSet::single(unseen.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen = unseen - comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw GraphError("permutation length does not match graph order");
    std::uint64_t seen = 0;
    for (Vertex p : perm) {
        if (p < 0 || p >= n || ((seen >> p) & 1U)) throw GraphError("not a permutation of the vertex set");
        seen |= std::uint64_t{1} << p;
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::uint64_t m = 0;
        for (Vertex u : g.neighbors(v)) m |= std::uint64_t{1} << perm[static_cast<std::size_t>(u)];
        adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = m;
    }
    return GraphAccess::make(std::move(adj));
}

int induced_edge_count(const Graph& g, VertexSet s) noexcept {
    int twice = 0;
    for (Vertex v : s) twice += std::popcount(g.adjacency()[static_cast<std::size_t>(v)] & s.bits());
    return twice / 2;
}

}  // namespace nearind
