#ifndef NEARIND_GOOD_GRAPHS_HPP
#define NEARIND_GOOD_GRAPHS_HPP

#include <vector>

#include "nearind/canonical.hpp"
#include "nearind/graph.hpp"

namespace nearind {

inline constexpr int kGenerateGoodMaxOrder = 10;
inline constexpr int kCharacterizationMaxOrder = 8;

/// An edge uv is good when N[u] ∪ N[v] = V(G). Throws GraphError if uv is
/// not an edge.
bool is_good_edge(const Graph& g, Vertex u, Vertex v);

struct GoodnessReport {
    Graph graph;
    std::vector<Edge> bad_edges;
    bool connected = false;
    /// connected and every edge good
    bool is_good = false;
};

GoodnessReport goodness(const Graph& g);
bool is_good(const Graph& g);

/// Closure of {K_1} ∪ {K_{r,s} : r, s >= 1} under G + H and G + (edgeless ℓ),
/// restricted to order <= max_order. Codes sorted ascending.
std::vector<CanonicalCode> generate_good_family(int max_order);

struct CharacterizationResult {
    bool equal = false;
    std::vector<CanonicalCode> generated_only;  // produced by the closure but not good
    std::vector<CanonicalCode> good_only;       // good but not produced by the closure
    std::size_t good_count = 0;
};

/// Compares generate_good_family(max_order) with the good graphs found by
/// exhaustive enumeration of orders 1..max_order.
CharacterizationResult verify_good_family_characterization(int max_order, int jobs = 1);

}  // namespace nearind

#endif  // NEARIND_GOOD_GRAPHS_HPP
