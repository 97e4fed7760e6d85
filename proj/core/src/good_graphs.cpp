#include "nearind/good_graphs.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nearind/enumerate.hpp"
#include "nearind/guard.hpp"

namespace nearind {

bool is_good_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) {
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }
    return (g.closed_neighborhood(u) | g.closed_neighborhood(v)) == g.vertices();
}

GoodnessReport goodness(const Graph& g) {
    GoodnessReport report{g, {}, is_connected(g), false};
    for (auto [u, v] : g.edges()) {
        if (!is_good_edge(g, u, v)) report.bad_edges.emplace_back(u, v);
    }
    report.is_good = report.connected && report.bad_edges.empty();
    return report;
}

bool is_good(const Graph& g) { return goodness(g).is_good; }

std::vector<CanonicalCode> generate_good_family(int max_order) {
    check_guard("good-family order", max_order, kGenerateGoodMaxOrder);
    std::map<CanonicalCode, Graph> members;
    std::vector<Graph> frontier;
    auto admit = [&](const Graph& g, std::vector<Graph>& into) {
        auto code = canonical_code(g);
        if (members.emplace(code, g).second) into.push_back(g);
    };

    if (max_order >= 1) admit(Graph::edgeless(1), frontier);
    for (int r = 1; r <= max_order; ++r) {
        for (int s = r; r + s <= max_order; ++s) admit(join(Graph::edgeless(r), Graph::edgeless(s)), frontier);
    }

    while (!frontier.empty()) {
        std::vector<Graph> fresh;
        std::vector<Graph> known;
        for (const auto& [code, g] : members) known.push_back(g);
        for (const auto& a : frontier) {
            for (const auto& b : known) {
                if (a.order() + b.order() <= max_order) admit(join(a, b), fresh);
            }
            for (int l = 1; a.order() + l <= max_order; ++l) admit(join(a, Graph::edgeless(l)), fresh);
        }
        frontier = std::move(fresh);
    }

    std::vector<CanonicalCode> out;
    out.reserve(members.size());
    for (const auto& [code, g] : members) out.push_back(code);
    return out;
}

CharacterizationResult verify_good_family_characterization(int max_order, int jobs) {
    check_guard("characterization order", max_order, kCharacterizationMaxOrder);
    std::vector<CanonicalCode> good;
    for (int n = 1; n <= max_order; ++n) {
        for (const auto& code : enumerate_codes(n, GraphFilter::all(), jobs)) {
            if (is_good(code.to_graph())) good.push_back(code);
        }
    }
    std::sort(good.begin(), good.end());
    const auto generated = generate_good_family(max_order);

    CharacterizationResult result;
    result.good_count = good.size();
    std::set_difference(generated.begin(), generated.end(), good.begin(), good.end(),
                        std::back_inserter(result.generated_only));
    std::set_difference(good.begin(), good.end(), generated.begin(), generated.end(),
                        std::back_inserter(result.good_only));
    result.equal = result.generated_only.empty() && result.good_only.empty();
    return result;
}

}  // namespace nearind
