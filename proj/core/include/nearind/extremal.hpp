#ifndef NEARIND_EXTREMAL_HPP
#define NEARIND_EXTREMAL_HPP

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "nearind/canonical.hpp"
#include "nearind/count.hpp"
#include "nearind/enumerate.hpp"
#include "nearind/report.hpp"

namespace nearind {

struct DistributionEntry {
    CanonicalCode code;
    int size = 0;
    Count sigma1;
};

/// sigma_1 over one representative per isomorphism class, in code order.
struct SigmaDistribution {
    int order = 0;
    GraphFilter filter;
    std::vector<DistributionEntry> entries;

    Count max_value() const;
    /// sigma_1 values sorted ascending (the multiset).
    std::vector<Count> values() const;
    /// Entries reordered by (sigma_1, code).
    std::vector<DistributionEntry> by_value() const;
};

SigmaDistribution sigma1_distribution(int n, GraphFilter filter = {}, int jobs = 1);

/// Rows `graph6<TAB>m<TAB>sigma1` under a header line, in the entry order given.
void write_tsv(std::ostream& os, const std::vector<DistributionEntry>& rows);
nlohmann::json distribution_json(const SigmaDistribution& dist, const std::vector<DistributionEntry>& rows);

inline constexpr int kMinBoundMaxOrder = 8;

/// Over all connected graphs of order 1..n_max: sigma_1 >= m, with equality
/// exactly on good graphs.
CheckResult verify_min_bound(int n_max, int jobs = 1);

inline constexpr int kMaxBoundMinOrder = 6;
inline constexpr int kMaxBoundMaxOrder = 8;

/// 27 * 2^(n-6), the largest sigma_1 over graphs of order n >= 6.
Count max_bound(int n);

/// The graphs that attain max_bound(n): 3K_2 ∪ (n-6)K_1, and also
/// 4K_2 ∪ (n-8)K_1 once n >= 8. Codes sorted ascending.
std::vector<CanonicalCode> expected_maximizers(int n);

/// Over all graphs of order n (6 <= n <= 8): sigma_1 <= max_bound(n), with
/// the equality set equal to expected_maximizers(n).
CheckResult verify_max_bound(int n, int jobs = 1);

/// sigma1 (recursion) against sigma_k_brute for k = 0, 1 on every graph of
/// order 0..max_n.
CheckResult verify_recursion(int max_n, int jobs = 1);

}  // namespace nearind

#endif  // NEARIND_EXTREMAL_HPP
