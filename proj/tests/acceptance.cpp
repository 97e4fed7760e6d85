// Acceptance checks. Run with no arguments for all criteria, or with criterion
// numbers (1-8) to run a subset. Prints one PASS/FAIL line per criterion and
// exits nonzero if any failed.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nearind/closed_forms.hpp"
#include "nearind/enumerate.hpp"
#include "nearind/extremal.hpp"
#include "nearind/family.hpp"
#include "nearind/good_graphs.hpp"
#include "nearind/sigma.hpp"

namespace {

using namespace nearind;

struct Outcome {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<void(Outcome&)> body;
};

Graph cycle(int n) { return construct(family::Cycle{n}); }
Graph matching(int m, int r) { return construct(family::MatchingPlusIsolated{m, r}); }

std::string show(const std::vector<Count>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

std::vector<Count> counts(std::initializer_list<std::uint64_t> xs) { return {xs.begin(), xs.end()}; }

// sub ⊆ super as multisets; both sorted
bool multiset_contains(const std::vector<Count>& super, const std::vector<Count>& sub) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void spot_values(Outcome& o) {
    struct Spot {
        std::string name;
        Graph graph;
        std::uint64_t expected;
    };
    const std::vector<Spot> spots = {
        {"K3", construct(family::Complete{3}), 3},
        {"P3", construct(family::Path{3}), 2},
        {"P4", construct(family::Path{4}), 5},
        {"2K2", matching(2, 0), 6},
        {"3K2", matching(3, 0), 27},
        {"C3+C4", disjoint_union(cycle(3), cycle(4)), 37},
        {"C4+C4", disjoint_union(cycle(4), cycle(4)), 56},
        {"C3+C5", disjoint_union(cycle(3), cycle(5)), 85},
        {"C4+C5", disjoint_union(cycle(4), cycle(5)), 130},
        {"C3+C6", disjoint_union(cycle(3), cycle(6)), 165},
        {"C4+C6", disjoint_union(cycle(4), cycle(6)), 250},
    };
    for (const auto& s : spots) {
        const Count got = sigma1(s.graph);
        o.expect(got == Count(s.expected),
                 "sigma1(" + s.name + ") = " + got.to_string() + ", expected " + std::to_string(s.expected));
    }
    const Graph c55 = disjoint_union(cycle(5), cycle(5));
    const Count got = sigma1(c55);
    const Count oracle = sigma_k_brute(c55, 1);
    o.expect(got == oracle, "sigma1(C5+C5) = " + got.to_string() + ", oracle " + oracle.to_string());
}

void table_reproduction(Outcome& o) {
    const auto d4 = sigma1_distribution(4);
    const auto table1 = counts({0, 3, 4, 4, 4, 5, 5, 5, 6, 6, 6});
    o.expect(d4.values() == table1, "order 4 values " + show(d4.values()) + " != " + show(table1));

    const auto d5 = sigma1_distribution(5);
    o.expect(d5.entries.size() == 34, "order 5 has " + std::to_string(d5.entries.size()) + " classes");
    o.expect(d5.max_value() == Count(12), "order 5 max sigma1 = " + d5.max_value().to_string() + ", expected 12");
    const auto table2 = counts({0, 4, 6, 6, 7, 8, 8, 8, 8, 8, 8, 8, 8, 9, 9, 9, 9, 9, 9, 9,
                                10, 10, 10, 10, 10, 10, 10, 10, 11, 11, 12, 12, 12, 12});
    o.expect(multiset_contains(d5.values(), table2),
             "order 5 multiset " + show(d5.values()) + " does not contain " + show(table2));

    const auto d6 = sigma1_distribution(6);
    o.expect(d6.entries.size() == 156, "order 6 has " + std::to_string(d6.entries.size()) + " classes");
    o.expect(d6.max_value() == Count(27), "order 6 max sigma1 = " + d6.max_value().to_string());
    std::vector<CanonicalCode> at_max;
    for (const auto& e : d6.entries) {
        if (e.sigma1 == d6.max_value()) at_max.push_back(e.code);
    }
    o.expect(at_max == std::vector<CanonicalCode>{canonical_code(matching(3, 0))},
             "order 6 maximum not attained uniquely by 3K2");
}

void oracle_equivalence(Outcome& o) {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    std::size_t total = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto graphs = enumerate_graphs(n);
        o.expect(graphs.size() == expected[n - 1],
                 "order " + std::to_string(n) + " has " + std::to_string(graphs.size()) + " classes");
        for (const Graph& g : graphs) {
            ++total;
            if (sigma1(g) != sigma_k_brute(g, 1) || sigma0(g) != sigma_k_brute(g, 0)) {
                o.expect(false, "recursion disagrees with oracle on " + canonical_code(g).graph6());
            }
        }
    }
    o.expect(total == 1252, "checked " + std::to_string(total) + " graphs, expected 1252");
}

void closed_form_suite(Outcome& o) {
    const auto r = verify_closed_forms(14, 40);
    o.expect(r.passed, r.detail);
    for (const auto& ce : r.counterexamples) o.expect(false, "mismatch: " + ce);
}

void min_bound(Outcome& o) {
    const auto r = verify_min_bound(7);
    o.expect(r.passed, r.detail);
    for (const auto& ce : r.counterexamples) o.expect(false, "counterexample: " + ce);
}

void max_bound_equality(Outcome& o) {
    const std::map<int, std::vector<CanonicalCode>> equality = {
        {6, {canonical_code(matching(3, 0))}},
        {7, {canonical_code(matching(3, 1))}},
        {8, {canonical_code(matching(3, 2)), canonical_code(matching(4, 0))}},
    };
    for (const auto& [n, expected] : equality) {
        const auto dist = sigma1_distribution(n);
        const Count bound = Count(27) * Count::pow2(n - 6);
        std::vector<CanonicalCode> attained;
        for (const auto& e : dist.entries) {
            o.expect(e.sigma1 <= bound, "n=" + std::to_string(n) + ": " + e.code.graph6() + " exceeds the bound");
            if (e.sigma1 == bound) attained.push_back(e.code);
        }
        auto want = expected;
        std::sort(want.begin(), want.end());
        o.expect(attained == want, "n=" + std::to_string(n) + ": equality set differs");
        const auto r = verify_max_bound(n);
        o.expect(r.passed, r.detail);
    }
}

void h_characterization(Outcome& o) {
    const auto r = verify_good_family_characterization(7);
    o.expect(r.equal, "generated and good sets differ (" + std::to_string(r.generated_only.size()) + " / " +
                          std::to_string(r.good_only.size()) + ")");
    o.expect(r.good_count > 0, "no good graphs found");
}

void property_suites(Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> order(0, 12);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    auto random_graph = [&](int n) {
        std::bernoulli_distribution coin(density(rng));
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        return Graph::build(n, edges);
    };

    for (int i = 0; i < 1000; ++i) {
        const Graph g = random_graph(order(rng));
        Count total;
        for (const auto& c : sigma_spectrum_brute(g)) total += c;
        o.expect(total == Count::pow2(g.order()), "spectrum sum on random graph " + std::to_string(i));
    }

    std::mt19937_64 pivot_rng(7);
    SigmaSolver random_pivot([&](const Graph& g) {
        return std::uniform_int_distribution<int>(0, g.order() - 1)(pivot_rng);
    }, false);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = random_graph(order(rng));
        o.expect(random_pivot.sigma1(g) == sigma1(g), "pivot dependence on random graph " + std::to_string(i));
    }

    std::uniform_int_distribution<int> half(0, 6);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = random_graph(half(rng));
        const Graph h = random_graph(half(rng));
        const Count lhs = sigma1(disjoint_union(g, h));
        o.expect(lhs == sigma1(g) * sigma0(h) + sigma0(g) * sigma1(h), "union rule on pair " + std::to_string(i));
        o.expect(lhs == sigma_k_brute(disjoint_union(g, h), 1), "union oracle on pair " + std::to_string(i));
    }

    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (g.is_edgeless()) continue;
            const Count s = sigma1(g);
            for (Vertex v = 0; v < n; ++v) {
                o.expect(sigma1(delete_vertices(g, VertexSet::single(v))) < s,
                         "vertex removal did not decrease sigma1 on " + canonical_code(g).graph6());
            }
        }
    }

    std::vector<Graph> h5;
    for (const auto& c : generate_good_family(5)) h5.push_back(c.to_graph());
    for (const Graph& g : h5) {
        for (const Graph& h : h5) o.expect(is_good(join(g, h)), "join of two good graphs is not good");
        for (int l = 1; l <= 3; ++l) o.expect(is_good(join(g, Graph::edgeless(l))), "edgeless join is not good");
    }
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "spot values", 1.0, spot_values},
        {2, "table reproduction (orders 4, 5, 6)", 10.0, table_reproduction},
        {3, "oracle equivalence, all graphs of order <= 7", 60.0, oracle_equivalence},
        {4, "closed forms, order <= 14, path identity n <= 40", 60.0, closed_form_suite},
        {5, "min bound, connected graphs of order <= 7", 60.0, min_bound},
        {6, "max bound and equality sets, n = 6, 7, 8", 300.0, max_bound_equality},
        {7, "H characterization, order <= 7", 120.0, h_characterization},
        {8, "property suites", std::numeric_limits<double>::infinity(), property_suites},
    };
    return all;
}

bool run_one(const Criterion& c) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.body(o);
    } catch (const std::exception& e) {
        o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_s) {
        std::ostringstream os;
        os << "took " << elapsed << " s, limit " << c.time_limit_s << " s";
        o.failures.push_back(os.str());
    }
    const bool ok = o.failures.empty();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  (" << std::fixed
              << std::setprecision(3) << elapsed << " s)" << std::endl;
    for (const auto& f : o.failures) std::cout << "      " << f << '\n';
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long id = std::strtol(argv[i], &end, 10);
        if (*end != '\0' || id < 1 || id > static_cast<long>(criteria().size())) {
            std::cerr << "usage: " << argv[0] << " [criterion 1-8 ...]\n";
            return 2;
        }
        wanted.push_back(static_cast<int>(id));
    }
    if (wanted.empty()) {
        for (const auto& c : criteria()) wanted.push_back(c.id);
    }
    int failed = 0;
    for (int id : wanted) failed += run_one(criteria()[static_cast<std::size_t>(id - 1)]) ? 0 : 1;
    std::cout << (wanted.size() - static_cast<std::size_t>(failed)) << "/" << wanted.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
