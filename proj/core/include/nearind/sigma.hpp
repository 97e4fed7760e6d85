#ifndef NEARIND_SIGMA_HPP
#define NEARIND_SIGMA_HPP

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "nearind/count.hpp"
#include "nearind/graph.hpp"
#include "nearind/guard.hpp"

namespace nearind {

/// Default cap on the order accepted by the subset-enumeration oracle.
inline constexpr int kBruteForceMaxOrder = 25;

/// Number of S ⊆ V(g) whose induced subgraph has exactly k edges, by
/// enumerating all 2^n subsets. k = 0 counts the empty set.
Count sigma_k_brute(const Graph& g, int k, int max_order = kBruteForceMaxOrder);

/// All of sigma_0 .. sigma_m at once; entry k is sigma_k. Sums to 2^n.
std::vector<Count> sigma_spectrum_brute(const Graph& g, int max_order = kBruteForceMaxOrder);

/// Picks the pivot vertex of a connected graph with at least one edge.
using PivotRule = std::function<Vertex(const Graph&)>;

/// Highest degree, ties to the lowest label.
Vertex max_degree_pivot(const Graph& g);

/// Evaluates sigma_0 and sigma_1 by vertex-deletion recursion.
///
/// Graphs are split into connected components first; sigma_0 multiplies over
/// components and sigma_1 uses the union rule
///   s1(G ∪ H) = s1(G) s0(H) + s0(G) s1(H).
/// A connected component C is expanded on a pivot v:
///   s0(C) = s0(C - v) + s0(C - N[v])
///   s1(C) = s1(C - v) + s1(C - N[v]) + Σ_{u ∈ N(v)} s0(C - (N[u] ∪ N[v]))
/// Component results are memoized by their compacted adjacency. A solver is
/// not thread-safe; give each thread its own.
class SigmaSolver {
public:
    SigmaSolver() : SigmaSolver(max_degree_pivot) {}
    explicit SigmaSolver(PivotRule pivot, bool memoize = true)
        : pivot_(std::move(pivot)), memoize_(memoize) {}

    Count sigma0(const Graph& g);
    Count sigma1(const Graph& g);

    std::size_t memo_size() const noexcept { return memo0_.size() + memo1_.size(); }
    void clear() noexcept {
        memo0_.clear();
        memo1_.clear();
    }

private:
    Count component_sigma0(const Graph& c);
    Count component_sigma1(const Graph& c);
    Vertex choose_pivot(const Graph& c) const;

    PivotRule pivot_;
    bool memoize_;
    std::unordered_map<Graph, Count> memo0_;
    std::unordered_map<Graph, Count> memo1_;
};

/// Merrifield–Simmons index (number of independent sets, including ∅).
Count sigma0(const Graph& g);
/// Number of vertex subsets inducing exactly one edge.
Count sigma1(const Graph& g);

/// sigma_1 of the disjoint union of g and h via s1(g)s0(h) + s0(g)s1(h).
Count sigma1_union(const Graph& g, const Graph& h);

}  // namespace nearind

#endif  // NEARIND_SIGMA_HPP
