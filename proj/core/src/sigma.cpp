#include "nearind/sigma.hpp"

#include <stdexcept>

namespace nearind {

namespace {

// Walks every subset of {0..n-1} adding vertices in increasing order and
// calls `leaf(edges)` once per subset. Branches whose edge count has already
// passed `limit` are cut.
template <class Leaf>
void walk_subsets(const Graph& g, int limit, Leaf&& leaf) {
    const int n = g.order();
    const auto adj = g.adjacency();
    auto rec = [&](auto&& self, int v, std::uint64_t chosen, int edges) -> void {
        if (v == n) {
            leaf(edges);
            return;
        }
        self(self, v + 1, chosen, edges);
        const int with = edges + std::popcount(adj[static_cast<std::size_t>(v)] & chosen);
        if (with <= limit) self(self, v + 1, chosen | (std::uint64_t{1} << v), with);
    };
    rec(rec, 0, 0, 0);
}

}  // namespace

Count sigma_k_brute(const Graph& g, int k, int max_order) {
    if (k < 0) throw std::invalid_argument("sigma_k needs k >= 0");
    check_guard("subset enumeration order", g.order(), max_order);
    std::uint64_t hits = 0;
    walk_subsets(g, k, [&](int edges) { hits += edges == k; });
    return Count(hits);
}

std::vector<Count> sigma_spectrum_brute(const Graph& g, int max_order) {
    check_guard("subset enumeration order", g.order(), max_order);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(g.size()) + 1, 0);
    walk_subsets(g, g.size(), [&](int edges) { ++hist[static_cast<std::size_t>(edges)]; });
    return {hist.begin(), hist.end()};
}

Vertex max_degree_pivot(const Graph& g) {
    Vertex best = 0;
    int best_degree = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > best_degree) {
            best = v;
            best_degree = g.degree(v);
        }
    }
    return best;
}

Vertex SigmaSolver::choose_pivot(const Graph& c) const {
    const Vertex v = pivot_(c);
    if (v < 0 || v >= c.order()) throw std::logic_error("pivot rule returned a vertex outside the graph");
    return v;
}

Count SigmaSolver::sigma0(const Graph& g) {
    Count total(1);
    int isolated = 0;
    for (VertexSet part : connected_components(g)) {
        if (part.size() == 1) {
            ++isolated;
            continue;
        }
        total *= component_sigma0(induced_subgraph(g, part));
    }
    return total * Count::pow2(isolated);
}

Count SigmaSolver::sigma1(const Graph& g) {
    // fold (s0, s1) over components with the union rule
    Count s0(1);
    Count s1(0);
    int isolated = 0;
    for (VertexSet part : connected_components(g)) {
        if (part.size() == 1) {
            ++isolated;
            continue;
        }
        const Graph c = induced_subgraph(g, part);
        const Count c0 = component_sigma0(c);
        const Count c1 = component_sigma1(c);
        s1 = s1 * c0 + s0 * c1;
        s0 *= c0;
    }
    return s1 * Count::pow2(isolated);
}

Count SigmaSolver::component_sigma0(const Graph& c) {
    if (memoize_) {
        if (auto it = memo0_.find(c); it != memo0_.end()) return it->second;
    }
    const Vertex v = choose_pivot(c);
    const Count value = sigma0(delete_vertices(c, VertexSet::single(v))) +
                        sigma0(delete_vertices(c, c.closed_neighborhood(v)));
    if (memoize_) memo0_.emplace(c, value);
    return value;
}

Count SigmaSolver::component_sigma1(const Graph& c) {
    if (memoize_) {
        if (auto it = memo1_.find(c); it != memo1_.end()) return it->second;
    }
    const Vertex v = choose_pivot(c);
    const VertexSet closed_v = c.closed_neighborhood(v);
    Count value = sigma1(delete_vertices(c, VertexSet::single(v))) + sigma1(delete_vertices(c, closed_v));
    for (Vertex u : c.neighbors(v)) {
        value += sigma0(delete_vertices(c, closed_v | c.closed_neighborhood(u)));
    }
    if (memoize_) memo1_.emplace(c, value);
    return value;
}

Count sigma0(const Graph& g) { return SigmaSolver{}.sigma0(g); }

Count sigma1(const Graph& g) { return SigmaSolver{}.sigma1(g); }

Count sigma1_union(const Graph& g, const Graph& h) {
    SigmaSolver solver;
    return solver.sigma1(g) * solver.sigma0(h) + solver.sigma0(g) * solver.sigma1(h);
}

}  // namespace nearind
