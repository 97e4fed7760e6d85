#include "nearind/closed_forms.hpp"

#include <stdexcept>
#include <utility>

#include "nearind/sigma.hpp"

namespace nearind {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// (a, b) = (X(k), X(k+1)) for the recurrence X(k+2) = X(k+1) + X(k).
Count linear_recurrence(Count a, Count b, int k) {
    if (k < 0) throw std::domain_error("recurrence index must be non-negative");
    for (int i = 0; i < k; ++i) {
        Count next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

Count binom2(int n) { return n < 2 ? Count(0) : Count(static_cast<std::uint64_t>(n) * (n - 1) / 2); }

Count pow_u(std::uint64_t base, int e) {
    Count out(1);
    for (int i = 0; i < e; ++i) out *= Count(base);
    return out;
}

Count small(int v) {
    if (v < 0) throw std::domain_error("negative coefficient in family formula");
    return Count(static_cast<std::uint64_t>(v));
}

}  // namespace

Count fibonacci(int k) { return linear_recurrence(Count(0), Count(1), k); }

Count lucas(int k) { return linear_recurrence(Count(2), Count(1), k); }

Count sigma0_path(int t) { return t <= 0 ? Count(1) : fibonacci(t + 2); }

Count sigma1_path(int n) {
    if (n <= 0) return Count(0);
    const Count numerator = small(n - 1) * lucas(n) + Count(2) * fibonacci(n - 1);
    return numerator.divide_exact(Count(5));
}

Count sigma1_path_by_edges(int n) {
    Count total(0);
    for (int i = 1; i <= n - 1; ++i) total += sigma0_path(i - 2) * sigma0_path(n - i - 2);
    return total;
}

Count sigma1_family(const FamilySpec& spec) {
    validate(spec);
    const auto s0 = sigma0_path;
    const auto s1 = sigma1_path;
    return std::visit(
        overloaded{
            [&](const family::Path& f) { return s1(f.n); },
            // every edge of C_n extends to exactly sigma_0(P_{n-4}) subsets
            [&](const family::Cycle& f) { return small(f.n) * s0(f.n - 4); },
            [&](const family::Complete& f) { return binom2(f.n); },
            [&](const family::Star& f) { return small(f.n - 1); },
            // K_{r,s} is good, so sigma_1 equals its size
            [&](const family::CompleteBipartite& f) { return small(f.r) * small(f.s); },
            [&](const family::Wheel& f) { return small(f.n - 1) * (Count(1) + fibonacci(f.n - 3)); },
            [&](const family::Broom& f) {
                const int n = f.n, k = f.k;
                return s1(k - 1) * Count::pow2(n - k) + s1(k - 2) + s0(k - 3) + small(n - k) * s0(k - 2);
            },
            [&](const family::Lollipop& f) {
                const int n = f.n, k = f.k;
                return small(n - k + 1) * s1(k - 1) + binom2(n - k) * s0(k - 1) + s1(k - 2) + s0(k - 3) +
                       small(n - k) * s0(k - 2);
            },
            [&](const family::Tadpole& f) {
                const int n = f.n, k = f.k;
                return s1(k - 1) * s0(n - k) + s1(n - k) * s0(k - 1) + s1(k - 2) * s0(n - k - 2) +
                       s1(n - k - 2) * s0(k - 2) + s0(k - 3) * s0(n - k - 2) + Count(2) * s0(k - 2) * s0(n - k - 3);
            },
            [&](const family::UnicyclicStar& f) { return small(f.n - 1) + Count::pow2(f.n - 3); },
            [&](const family::MatchingPlusIsolated& f) {
                if (f.m == 0) return Count(0);
                return small(f.m) * pow_u(3, f.m - 1) * Count::pow2(f.r);
            },
            [&](const family::Edgeless&) { return Count(0); },
        },
        spec);
}

CheckResult verify_closed_forms(int max_n, int path_max) {
    check_guard("closed-form check order", max_n, kBruteForceMaxOrder);
    CheckResult result{"closed-forms", true, "", {}, {}};
    std::size_t instances = 0;
    for (const auto& spec : family_instances(max_n)) {
        ++instances;
        if (sigma1_family(spec) != sigma_k_brute(construct(spec), 1)) {
            result.passed = false;
            result.counterexamples.push_back(to_string(spec));
        }
    }
    for (int n = 1; n <= path_max; ++n) {
        if (sigma1_path(n) != sigma1_path_by_edges(n)) {
            result.passed = false;
            result.counterexamples.push_back("path-identity:" + std::to_string(n));
        }
    }
    result.detail = std::to_string(instances) + " family instances of order <= " + std::to_string(max_n) +
                    ", path identity for n <= " + std::to_string(path_max);
    result.data = {{"max_n", max_n}, {"instances", instances}, {"path_max", path_max}};
    return result;
}

}  // namespace nearind
