#include "nearind/extremal.hpp"

#include <algorithm>
#include <ostream>

#include "nearind/good_graphs.hpp"
#include "nearind/guard.hpp"
#include "nearind/sigma.hpp"
#include "parallel.hpp"

namespace nearind {

Count SigmaDistribution::max_value() const {
    Count best(0);
    for (const auto& e : entries) best = std::max(best, e.sigma1);
    return best;
}

std::vector<Count> SigmaDistribution::values() const {
    std::vector<Count> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.sigma1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DistributionEntry> SigmaDistribution::by_value() const {
    auto rows = entries;
    std::stable_sort(rows.begin(), rows.end(), [](const DistributionEntry& a, const DistributionEntry& b) {
        return a.sigma1 != b.sigma1 ? a.sigma1 < b.sigma1 : a.code < b.code;
    });
    return rows;
}

SigmaDistribution sigma1_distribution(int n, GraphFilter filter, int jobs) {
    const auto codes = enumerate_codes(n, filter, jobs);
    SigmaDistribution dist{n, filter, std::vector<DistributionEntry>(codes.size())};
    detail::parallel_slices(codes.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        SigmaSolver solver;
        for (std::size_t i = begin; i < end; ++i) {
            const Graph g = codes[i].to_graph();
            dist.entries[i] = {codes[i], g.size(), solver.sigma1(g)};
        }
    });
    return dist;
}

void write_tsv(std::ostream& os, const std::vector<DistributionEntry>& rows) {
    os << "graph6\tm\tsigma1\n";
    for (const auto& r : rows) os << r.code.graph6() << '\t' << r.size << '\t' << r.sigma1 << '\n';
}

nlohmann::json distribution_json(const SigmaDistribution& dist, const std::vector<DistributionEntry>& rows) {
    nlohmann::json out{{"n", dist.order},
                       {"filter", dist.filter.describe()},
                       {"count", rows.size()},
                       {"max_sigma1", dist.max_value().to_string()}};
    auto& arr = out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        // sigma1 stays a string: values may exceed 64 bits in general
        arr.push_back({{"graph6", r.code.graph6()}, {"m", r.size}, {"sigma1", r.sigma1.to_string()}});
    }
    return out;
}

CheckResult verify_min_bound(int n_max, int jobs) {
    check_guard("min-bound order", n_max, kMinBoundMaxOrder);
    CheckResult result{"min-bound", true, "", {}, {}};
    std::size_t checked = 0;
    std::size_t equality = 0;
    for (int n = 1; n <= n_max; ++n) {
        const auto dist = sigma1_distribution(n, GraphFilter::connected(), jobs);
        for (const auto& e : dist.entries) {
            ++checked;
            const Graph g = e.code.to_graph();
            const Count m(static_cast<std::uint64_t>(e.size));
            const bool good = is_good(g);
            if (e.sigma1 < m || (e.sigma1 == m) != good) result.fail(e.code.graph6());
            equality += e.sigma1 == m;
        }
    }
    result.detail = std::to_string(checked) + " connected graphs of order <= " + std::to_string(n_max) + ", " +
                    std::to_string(equality) + " with sigma1 = m";
    result.data = {{"n_max", n_max}, {"graphs", checked}, {"equality_cases", equality}};
    return result;
}

Count max_bound(int n) {
    if (n < kMaxBoundMinOrder) throw std::domain_error("the upper bound needs n >= 6");
    return Count(27) * Count::pow2(n - 6);
}

std::vector<CanonicalCode> expected_maximizers(int n) {
    std::vector<CanonicalCode> out;
    auto matching = [](int m, int r) {
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
        return Graph::build(2 * m + r, edges);
    };
    if (n >= 6) out.push_back(canonical_code(matching(3, n - 6)));
    if (n >= 8) out.push_back(canonical_code(matching(4, n - 8)));
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult verify_max_bound(int n, int jobs) {
    if (n < kMaxBoundMinOrder || n > kMaxBoundMaxOrder) {
        throw GuardExceeded("max-bound verification supports 6 <= n <= 8, got " + std::to_string(n));
    }
    CheckResult result{"max-bound n=" + std::to_string(n), true, "", {}, {}};
    const auto dist = sigma1_distribution(n, GraphFilter::all(), jobs);
    const Count bound = max_bound(n);
    std::vector<CanonicalCode> attained;
    for (const auto& e : dist.entries) {
        if (e.sigma1 > bound) result.fail(e.code.graph6());
        if (e.sigma1 == bound) attained.push_back(e.code);
    }
    const auto expected = expected_maximizers(n);
    if (attained != expected) {
        result.passed = false;
        for (const auto& c : attained) {
            if (!std::binary_search(expected.begin(), expected.end(), c)) result.counterexamples.push_back(c.graph6());
        }
    }
    std::vector<std::string> attained_g6;
    std::vector<std::string> expected_g6;
    for (const auto& c : attained) attained_g6.push_back(c.graph6());
    for (const auto& c : expected) expected_g6.push_back(c.graph6());
    result.detail = std::to_string(dist.entries.size()) + " graphs, bound " + bound.to_string() + ", max " +
                    dist.max_value().to_string() + ", " + std::to_string(attained.size()) + " maximizer(s)";
    result.data = {{"n", n},
                   {"graphs", dist.entries.size()},
                   {"bound", bound.to_string()},
                   {"max_sigma1", dist.max_value().to_string()},
                   {"maximizers", attained_g6},
                   {"expected_maximizers", expected_g6}};
    return result;
}

CheckResult verify_recursion(int max_n, int jobs) {
    check_guard("recursion check order", max_n, kEnumerateAllMaxOrder);
    CheckResult result{"recursion", true, "", {}, {}};
    std::size_t checked = 0;
    for (int n = 1; n <= max_n; ++n) {
        const auto codes = enumerate_codes(n, GraphFilter::all(), jobs);
        std::vector<char> bad(codes.size(), 0);
        detail::parallel_slices(codes.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
            SigmaSolver solver;
            for (std::size_t i = begin; i < end; ++i) {
                const Graph g = codes[i].to_graph();
                bad[i] = solver.sigma1(g) != sigma_k_brute(g, 1) || solver.sigma0(g) != sigma_k_brute(g, 0);
            }
        });
        for (std::size_t i = 0; i < codes.size(); ++i) {
            if (bad[i]) result.fail(codes[i].graph6());
        }
        checked += codes.size();
    }
    result.detail = std::to_string(checked) + " graphs of order <= " + std::to_string(max_n);
    result.data = {{"max_n", max_n}, {"graphs", checked}};
    return result;
}

}  // namespace nearind
