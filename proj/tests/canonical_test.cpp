#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "nearind/canonical.hpp"
#include "nearind/family.hpp"
#include "nearind/graph6.hpp"
#include "test_util.hpp"

namespace nearind {
namespace {

/// Minimum labeling code over all n! permutations; a slower canonical form.
CanonicalCode brute_canonical(const Graph& g) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    CanonicalCode best = code_of_labeling(g);
    do {
        best = std::min(best, code_of_labeling(permute(g, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

TEST(CanonicalTest, LabelingCodeLayout) {
    // first pair (0,1) is the most significant bit
    EXPECT_EQ(code_of_labeling(Graph::build(3, {{0, 1}})).bits(), 0b100U);
    EXPECT_EQ(code_of_labeling(Graph::build(3, {{1, 2}})).bits(), 0b001U);
    EXPECT_EQ(code_of_labeling(construct(family::Complete{4})).bits(), 0b111111U);
}

TEST(CanonicalTest, EdgeCountPreserved) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const Graph g = testing::random_graph(rng, 0, 10);
        const CanonicalCode c = canonical_code(g);
        EXPECT_EQ(c.order(), g.order());
        EXPECT_EQ(std::popcount(c.bits()), g.size());
        EXPECT_EQ(canonical_code(c.to_graph()), c);
        EXPECT_EQ(code_of_labeling(canonical_form(g)), c);
        EXPECT_EQ(parse_graph6(c.graph6()), c.to_graph());
    }
}

TEST(CanonicalTest, RelabelingInvariance) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 3000; ++trial) {
        const Graph g = testing::random_graph(rng, 0, 10);
        const auto perm = testing::random_permutation(rng, g.order());
        EXPECT_EQ(canonical_code(g), canonical_code(permute(g, perm)));
    }
}

TEST(CanonicalTest, RegularGraphsAreDistinguished) {
    // same degree sequence, not isomorphic
    const Graph c6 = construct(family::Cycle{6});
    const Graph two_triangles = disjoint_union(construct(family::Cycle{3}), construct(family::Cycle{3}));
    EXPECT_NE(canonical_code(c6), canonical_code(two_triangles));
    const Graph k33 = construct(family::CompleteBipartite{3, 3});
    const Graph prism = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    EXPECT_NE(canonical_code(k33), canonical_code(prism));
    // Petersen graph, drawn two ways
    const Graph petersen = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                             {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::mt19937_64 rng(43);
    EXPECT_EQ(canonical_code(petersen), canonical_code(permute(petersen, testing::random_permutation(rng, 10))));
}

Graph from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1U) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

// Both codes must induce the same partition into isomorphism classes.
void expect_same_classes(const std::vector<Graph>& graphs) {
    std::map<CanonicalCode, CanonicalCode> fast_to_brute;
    std::map<CanonicalCode, CanonicalCode> brute_to_fast;
    for (const Graph& g : graphs) {
        const CanonicalCode fast = canonical_code(g);
        const CanonicalCode brute = brute_canonical(g);
        const auto [it, fresh] = fast_to_brute.emplace(fast, brute);
        EXPECT_EQ(it->second, brute) << emit_graph6(g);
        const auto [jt, fresh2] = brute_to_fast.emplace(brute, fast);
        EXPECT_EQ(jt->second, fast) << emit_graph6(g);
    }
}

TEST(CanonicalTest, AgreesWithExhaustiveSearch) {
    for (int n = 0; n <= 5; ++n) {
        std::vector<Graph> all;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) all.push_back(from_mask(n, mask));
        expect_same_classes(all);
    }
    std::mt19937_64 rng(44);
    std::vector<Graph> sample;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = testing::random_graph(rng, 6, 6);
        sample.push_back(g);
        sample.push_back(permute(g, testing::random_permutation(rng, 6)));
    }
    expect_same_classes(sample);
}

TEST(CanonicalTest, LabeledGraphsOnFourVertices) {
    // every labeled graph on 4 vertices lands in one of 11 classes
    std::set<CanonicalCode> classes;
    for (std::uint64_t mask = 0; mask < 64; ++mask) classes.insert(canonical_code(from_mask(4, mask)));
    EXPECT_EQ(classes.size(), 11U);
}

TEST(CanonicalTest, OrderGuard) {
    EXPECT_THROW(canonical_code(Graph::edgeless(11)), std::length_error);
    EXPECT_NO_THROW(canonical_code(Graph::edgeless(10)));
}

}  // namespace
}  // namespace nearind
