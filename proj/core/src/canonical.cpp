#include "nearind/canonical.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "nearind/graph6.hpp"
#include "nearind/guard.hpp"

namespace nearind {

namespace {

constexpr int kMax = kCanonicalMaxOrder;
using Coloring = std::array<int, kMax>;

std::uint64_t encode(const Graph& g, const std::array<Vertex, kMax>& vertex_at) {
    const int n = g.order();
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t row = g.adjacency()[static_cast<std::size_t>(vertex_at[static_cast<std::size_t>(i)])];
        for (int j = i + 1; j < n; ++j) {
            bits = (bits << 1) | ((row >> vertex_at[static_cast<std::size_t>(j)]) & 1U);
        }
    }
    return bits;
}

class LabelSearch {
public:
    explicit LabelSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::array<Vertex, kMax> run() {
        Coloring color{};
        for (int v = 0; v < n_; ++v) color[static_cast<std::size_t>(v)] = 0;
        int cells = n_ > 0 ? 1 : 0;
        refine(color, cells);
        descend(color, cells);
        return best_labeling_;
    }

private:
    // Splits cells by neighbor counts into every cell until stable. The new
    // cell order depends only on the old order and the counts, so the
    // refinement commutes with relabeling.
    void refine(Coloring& color, int& cells) const {
        using Signature = std::array<int, kMax + 1>;
        while (true) {
            std::array<Signature, kMax> sig{};
            for (int v = 0; v < n_; ++v) {
                auto& s = sig[static_cast<std::size_t>(v)];
                s.fill(0);
                s[0] = color[static_cast<std::size_t>(v)];
                for (Vertex u : g_.neighbors(v)) ++s[static_cast<std::size_t>(color[static_cast<std::size_t>(u)]) + 1];
            }
            std::array<int, kMax> order{};
            for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
            std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
                return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
            });
            int next_cells = 0;
            for (int i = 0; i < n_; ++i) {
                const auto v = static_cast<std::size_t>(order[static_cast<std::size_t>(i)]);
                if (i > 0 && sig[v] != sig[static_cast<std::size_t>(order[static_cast<std::size_t>(i) - 1])]) {
                    ++next_cells;
                }
                color[v] = next_cells;
            }
            next_cells = n_ > 0 ? next_cells + 1 : 0;
            if (next_cells == cells) return;
            cells = next_cells;
        }
    }

    void descend(const Coloring& color, int cells) {
        if (cells == n_) {
            std::array<Vertex, kMax> vertex_at{};
            for (int v = 0; v < n_; ++v) vertex_at[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
            const std::uint64_t code = encode(g_, vertex_at);
            if (!have_best_ || code < best_code_) {
                have_best_ = true;
                best_code_ = code;
                best_labeling_ = vertex_at;
            }
            return;
        }

        // first cell with more than one vertex
        std::array<int, kMax> cell_size{};
        for (int v = 0; v < n_; ++v) ++cell_size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        int target = 0;
        while (cell_size[static_cast<std::size_t>(target)] < 2) ++target;

        std::uint64_t tried = 0;
        for (int v = 0; v < n_; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            // a twin of an already-tried vertex spans an isomorphic subtree
            bool twin = false;
            const std::uint64_t nv = g_.adjacency()[static_cast<std::size_t>(v)];
            for (Vertex u : VertexSet(tried)) {
                const std::uint64_t nu = g_.adjacency()[static_cast<std::size_t>(u)];
                if ((nu & ~(std::uint64_t{1} << v)) == (nv & ~(std::uint64_t{1} << u))) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried |= std::uint64_t{1} << v;

            Coloring child = color;
            for (int w = 0; w < n_; ++w) {
                auto& c = child[static_cast<std::size_t>(w)];
                if (c > target || (c == target && w != v)) ++c;
            }
            int child_cells = cells + 1;
            refine(child, child_cells);
            descend(child, child_cells);
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::uint64_t best_code_ = std::numeric_limits<std::uint64_t>::max();
    std::array<Vertex, kMax> best_labeling_{};
};

}  // namespace

Graph CanonicalCode::to_graph() const {
    std::vector<Edge> edges;
    int shift = order_ * (order_ - 1) / 2;
    for (int i = 0; i < order_; ++i) {
        for (int j = i + 1; j < order_; ++j) {
            --shift;
            if ((bits_ >> shift) & 1U) edges.emplace_back(i, j);
        }
    }
    return Graph::build(order_, edges);
}

std::string CanonicalCode::graph6() const { return emit_graph6(to_graph()); }

CanonicalCode code_of_labeling(const Graph& g) {
    check_guard("canonical code order", g.order(), kCanonicalMaxOrder);
    std::array<Vertex, kMax> identity{};
    for (int v = 0; v < g.order(); ++v) identity[static_cast<std::size_t>(v)] = v;
    return {g.order(), encode(g, identity)};
}

CanonicalCode canonical_code(const Graph& g) {
    check_guard("canonical code order", g.order(), kCanonicalMaxOrder);
    const auto vertex_at = LabelSearch(g).run();
    return {g.order(), encode(g, vertex_at)};
}

Graph canonical_form(const Graph& g) { return canonical_code(g).to_graph(); }

}  // namespace nearind
