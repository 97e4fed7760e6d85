#include "nearind/family.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

namespace nearind {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const FamilySpec& spec, const char* why) {
    if (!ok) throw GraphError("invalid family " + to_string(spec) + ": " + why);
}

void add_path(std::vector<Edge>& edges, int first, int count) {
    for (int i = 0; i + 1 < count; ++i) edges.emplace_back(first + i, first + i + 1);
}

void add_clique(std::vector<Edge>& edges, int first, int count) {
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) edges.emplace_back(first + i, first + j);
    }
}

struct Named {
    std::string_view name;
    int arity;
};

constexpr Named kNames[] = {
    {"path", 1},      {"cycle", 1},     {"complete", 1},  {"star", 1},
    {"bipartite", 2}, {"wheel", 1},     {"broom", 2},     {"lollipop", 2},
    {"tadpole", 2},   {"unicyclic", 1}, {"matching", 2},  {"edgeless", 1},
};

}  // namespace

int family_order(const FamilySpec& spec) {
    return std::visit(overloaded{
                          [](const family::CompleteBipartite& f) { return f.r + f.s; },
                          [](const family::MatchingPlusIsolated& f) { return 2 * f.m + f.r; },
                          [](const auto& f) { return f.n; },
                      },
                      spec);
}

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [&](const family::Path& f) { require(f.n >= 1, spec, "needs n >= 1"); },
                   [&](const family::Cycle& f) { require(f.n >= 3, spec, "needs n >= 3"); },
                   [&](const family::Complete& f) { require(f.n >= 1, spec, "needs n >= 1"); },
                   [&](const family::Star& f) { require(f.n >= 1, spec, "needs n >= 1"); },
                   [&](const family::CompleteBipartite& f) {
                       require(f.r >= 1 && f.s >= 1, spec, "needs r, s >= 1");
                   },
                   [&](const family::Wheel& f) { require(f.n >= 4, spec, "needs n >= 4"); },
                   [&](const family::Broom& f) { require(f.k >= 2 && f.n >= f.k, spec, "needs k >= 2 and n >= k"); },
                   [&](const family::Lollipop& f) {
                       require(f.k >= 2 && f.n >= f.k, spec, "needs k >= 2 and n >= k");
                   },
                   [&](const family::Tadpole& f) {
                       require(f.k >= 2 && f.n - f.k >= 2, spec, "needs k >= 2 and n - k >= 2");
                   },
                   [&](const family::UnicyclicStar& f) { require(f.n >= 3, spec, "needs n >= 3"); },
                   [&](const family::MatchingPlusIsolated& f) {
                       require(f.m >= 0 && f.r >= 0, spec, "needs m, r >= 0");
                   },
                   [&](const family::Edgeless& f) { require(f.n >= 0, spec, "needs n >= 0"); },
               },
               spec);
    const int n = family_order(spec);
    require(n <= Graph::kMaxOrder, spec, "order exceeds 64");
}

Graph construct(const FamilySpec& spec) {
    validate(spec);
    std::vector<Edge> edges;
    return std::visit(
        overloaded{
            [&](const family::Path& f) {
                add_path(edges, 0, f.n);
                return Graph::build(f.n, edges);
            },
            [&](const family::Cycle& f) {
                add_path(edges, 0, f.n);
                edges.emplace_back(f.n - 1, 0);
                return Graph::build(f.n, edges);
            },
            [&](const family::Complete& f) {
                add_clique(edges, 0, f.n);
                return Graph::build(f.n, edges);
            },
            [&](const family::Star& f) {
                for (int leaf = 1; leaf < f.n; ++leaf) edges.emplace_back(0, leaf);
                return Graph::build(f.n, edges);
            },
            [&](const family::CompleteBipartite& f) {
                return join(Graph::edgeless(f.r), Graph::edgeless(f.s));
            },
            [&](const family::Wheel& f) {
                return join(construct(family::Cycle{f.n - 1}), Graph::edgeless(1));
            },
            [&](const family::Broom& f) {
                // path 0..k-1; pendants k..n-1 on vertex 0
                add_path(edges, 0, f.k);
                for (int p = f.k; p < f.n; ++p) edges.emplace_back(0, p);
                return Graph::build(f.n, edges);
            },
            [&](const family::Lollipop& f) {
                // path 0..k-1; clique k..n-1, every clique vertex adjacent to 0
                add_path(edges, 0, f.k);
                add_clique(edges, f.k, f.n - f.k);
                for (int c = f.k; c < f.n; ++c) edges.emplace_back(0, c);
                return Graph::build(f.n, edges);
            },
            [&](const family::Tadpole& f) {
                // path 0..k-1; second path k..n-1 whose two ends are adjacent to 0
                add_path(edges, 0, f.k);
                add_path(edges, f.k, f.n - f.k);
                edges.emplace_back(0, f.k);
                edges.emplace_back(0, f.n - 1);
                return Graph::build(f.n, edges);
            },
            [&](const family::UnicyclicStar& f) {
                for (int leaf = 1; leaf < f.n; ++leaf) edges.emplace_back(0, leaf);
                edges.emplace_back(1, 2);
                return Graph::build(f.n, edges);
            },
            [&](const family::MatchingPlusIsolated& f) {
                for (int i = 0; i < f.m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
                return Graph::build(2 * f.m + f.r, edges);
            },
            [&](const family::Edgeless& f) { return Graph::edgeless(f.n); },
        },
        spec);
}

FamilySpec parse_family(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    std::string_view name = parts.front();
    if (name == "complete-bipartite") name = "bipartite";
    if (name == "unicyclic-star") name = "unicyclic";

    int arity = -1;
    for (const auto& entry : kNames) {
        if (entry.name == name) arity = entry.arity;
    }
    if (arity < 0) throw GraphError("unknown graph family '" + std::string(parts.front()) + "'");
    if (static_cast<int>(parts.size()) != arity + 1) {
        throw GraphError("family '" + std::string(name) + "' takes " + std::to_string(arity) + " parameter(s)");
    }

    int p[2] = {0, 0};
    for (int i = 0; i < arity; ++i) {
        const auto& s = parts[static_cast<std::size_t>(i) + 1];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p[i]);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw GraphError("bad integer parameter '" + std::string(s) + "' in family spec");
        }
    }

    FamilySpec spec;
    if (name == "path") spec = family::Path{p[0]};
    else if (name == "cycle") spec = family::Cycle{p[0]};
    else if (name == "complete") spec = family::Complete{p[0]};
    else if (name == "star") spec = family::Star{p[0]};
    else if (name == "bipartite") spec = family::CompleteBipartite{p[0], p[1]};
    else if (name == "wheel") spec = family::Wheel{p[0]};
    else if (name == "broom") spec = family::Broom{p[0], p[1]};
    else if (name == "lollipop") spec = family::Lollipop{p[0], p[1]};
    else if (name == "tadpole") spec = family::Tadpole{p[0], p[1]};
    else if (name == "unicyclic") spec = family::UnicyclicStar{p[0]};
    else if (name == "matching") spec = family::MatchingPlusIsolated{p[0], p[1]};
    else spec = family::Edgeless{p[0]};
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    auto one = [](const char* name, int a) { return std::string(name) + ":" + std::to_string(a); };
    auto two = [](const char* name, int a, int b) {
        return std::string(name) + ":" + std::to_string(a) + ":" + std::to_string(b);
    };
    return std::visit(overloaded{
                          [&](const family::Path& f) { return one("path", f.n); },
                          [&](const family::Cycle& f) { return one("cycle", f.n); },
                          [&](const family::Complete& f) { return one("complete", f.n); },
                          [&](const family::Star& f) { return one("star", f.n); },
                          [&](const family::CompleteBipartite& f) { return two("bipartite", f.r, f.s); },
                          [&](const family::Wheel& f) { return one("wheel", f.n); },
                          [&](const family::Broom& f) { return two("broom", f.n, f.k); },
                          [&](const family::Lollipop& f) { return two("lollipop", f.n, f.k); },
                          [&](const family::Tadpole& f) { return two("tadpole", f.n, f.k); },
                          [&](const family::UnicyclicStar& f) { return one("unicyclic", f.n); },
                          [&](const family::MatchingPlusIsolated& f) { return two("matching", f.m, f.r); },
                          [&](const family::Edgeless& f) { return one("edgeless", f.n); },
                      },
                      spec);
}

std::vector<FamilySpec> family_instances(int max_order) {
    const int cap = std::min(max_order, Graph::kMaxOrder);
    std::vector<FamilySpec> out;
    for (int n = 0; n <= cap; ++n) out.push_back(family::Edgeless{n});
    for (int n = 1; n <= cap; ++n) {
        out.push_back(family::Path{n});
        out.push_back(family::Complete{n});
        out.push_back(family::Star{n});
        if (n >= 3) out.push_back(family::Cycle{n});
        if (n >= 3) out.push_back(family::UnicyclicStar{n});
        if (n >= 4) out.push_back(family::Wheel{n});
        for (int k = 2; k <= n; ++k) {
            out.push_back(family::Broom{n, k});
            out.push_back(family::Lollipop{n, k});
            if (n - k >= 2) out.push_back(family::Tadpole{n, k});
        }
        for (int r = 1; r < n; ++r) out.push_back(family::CompleteBipartite{r, n - r});
        for (int m = 0; 2 * m <= n; ++m) out.push_back(family::MatchingPlusIsolated{m, n - 2 * m});
    }
    return out;
}

}  // namespace nearind
