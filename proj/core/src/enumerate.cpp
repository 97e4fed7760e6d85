#include "nearind/enumerate.hpp"

#include <algorithm>

#include "nearind/guard.hpp"
#include "parallel.hpp"

namespace nearind {

namespace {

constexpr int kMaskScanHardCap = 7;

void sort_unique(std::vector<CanonicalCode>& codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

Graph with_new_vertex(const Graph& parent, std::uint64_t neighborhood) {
    const int n = parent.order();
    std::vector<std::uint64_t> adj(parent.adjacency().begin(), parent.adjacency().end());
    for (Vertex u : VertexSet(neighborhood)) adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << n;
    adj.push_back(neighborhood);
    return Graph::from_adjacency(std::move(adj));
}

}  // namespace

bool GraphFilter::accepts(const Graph& g) const {
    switch (kind) {
        case Kind::All: return true;
        case Kind::Connected: return is_connected(g);
        case Kind::Size: return g.size() == size;
    }
    return false;
}

std::string GraphFilter::describe() const {
    switch (kind) {
        case Kind::All: return "all";
        case Kind::Connected: return "connected";
        case Kind::Size: return "size=" + std::to_string(size);
    }
    return "?";
}

std::vector<CanonicalCode> enumerate_codes_by_masks(int n) {
    check_guard("mask-scan enumeration order", n, kMaskScanHardCap);
    if (n < 0) return {};
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<CanonicalCode> codes;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(adj.begin(), adj.end(), 0);
        for (Vertex p : VertexSet(mask)) {
            auto [i, j] = pairs[static_cast<std::size_t>(p)];
            adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
        }
        codes.push_back(canonical_code(Graph::from_adjacency(adj)));
        if (codes.size() > (std::size_t{1} << 16)) sort_unique(codes);
    }
    sort_unique(codes);
    return codes;
}

std::vector<CanonicalCode> enumerate_codes_by_extension(int n, bool connected_only, int jobs) {
    check_guard("extension enumeration order",
                n, connected_only ? kEnumerateConnectedMaxOrder : kEnumerateAllMaxOrder);
    if (n < 0) return {};
    if (n == 0) return connected_only ? std::vector<CanonicalCode>{} : std::vector<CanonicalCode>{CanonicalCode{}};

    std::vector<CanonicalCode> level{canonical_code(Graph::edgeless(1))};
    for (int order = 2; order <= n; ++order) {
        std::vector<Graph> parents;
        parents.reserve(level.size());
        for (const auto& code : level) parents.push_back(code.to_graph());

        const std::uint64_t subsets = std::uint64_t{1} << (order - 1);
        std::vector<std::vector<CanonicalCode>> found(static_cast<std::size_t>(std::max(jobs, 1)));
        detail::parallel_slices(parents.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t worker) {
            auto& out = found[worker];
            for (std::size_t p = begin; p < end; ++p) {
                for (std::uint64_t nb = connected_only ? 1 : 0; nb < subsets; ++nb) {
                    out.push_back(canonical_code(with_new_vertex(parents[p], nb)));
                }
                if (out.size() > (std::size_t{1} << 20)) sort_unique(out);
            }
            sort_unique(out);
        });

        level.clear();
        for (auto& part : found) level.insert(level.end(), part.begin(), part.end());
        sort_unique(level);
    }
    return level;
}

std::vector<CanonicalCode> enumerate_codes(int n, GraphFilter filter, int jobs) {
    const bool connected = filter.kind == GraphFilter::Kind::Connected;
    check_guard("enumeration order", n, connected ? kEnumerateConnectedMaxOrder : kEnumerateAllMaxOrder);
    std::vector<CanonicalCode> codes;
    if (connected && n > kMaskScanMaxOrder) {
        codes = enumerate_codes_by_extension(n, true, jobs);
    } else if (n <= kMaskScanMaxOrder) {
        codes = enumerate_codes_by_masks(n);
    } else {
        codes = enumerate_codes_by_extension(n, false, jobs);
    }
    if (filter.kind != GraphFilter::Kind::All) {
        std::erase_if(codes, [&](const CanonicalCode& c) { return !filter.accepts(c.to_graph()); });
    }
    return codes;
}

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter, int jobs) {
    std::vector<Graph> out;
    for (const auto& code : enumerate_codes(n, filter, jobs)) out.push_back(code.to_graph());
    return out;
}

}  // namespace nearind
