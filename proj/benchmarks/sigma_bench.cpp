#include <benchmark/benchmark.h>

#include <random>

#include "nearind/closed_forms.hpp"
#include "nearind/family.hpp"
#include "nearind/sigma.hpp"

namespace {

using namespace nearind;

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::build(n, edges);
}

void BM_Sigma1Recursion(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
    for (auto _ : state) {
        SigmaSolver solver;
        benchmark::DoNotOptimize(solver.sigma1(g));
    }
}
BENCHMARK(BM_Sigma1Recursion)->DenseRange(8, 24, 4);

void BM_Sigma1Brute(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(sigma_k_brute(g, 1));
}
BENCHMARK(BM_Sigma1Brute)->DenseRange(8, 24, 4);

void BM_Sigma1Path(benchmark::State& state) {
    const Graph p = construct(family::Path{static_cast<int>(state.range(0))});
    for (auto _ : state) {
        SigmaSolver solver;
        benchmark::DoNotOptimize(solver.sigma1(p));
    }
}
BENCHMARK(BM_Sigma1Path)->Arg(16)->Arg(32)->Arg(64);

void BM_Sigma1PathClosedForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sigma1_path(n));
}
BENCHMARK(BM_Sigma1PathClosedForm)->Arg(16)->Arg(64)->Arg(160);

}  // namespace
