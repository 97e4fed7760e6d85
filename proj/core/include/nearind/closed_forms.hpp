#ifndef NEARIND_CLOSED_FORMS_HPP
#define NEARIND_CLOSED_FORMS_HPP

#include "nearind/count.hpp"
#include "nearind/family.hpp"
#include "nearind/report.hpp"

namespace nearind {

/// Fibonacci numbers, F(0) = 0, F(1) = F(2) = 1. Defined for k >= 0.
Count fibonacci(int k);
/// Lucas numbers, L(0) = 2, L(1) = 1, L(2) = 3. Defined for k >= 0.
Count lucas(int k);

/// sigma_0(P_t) = F(t + 2); 1 for every t <= 0.
Count sigma0_path(int t);

/// sigma_1(P_n) = ((n - 1) L(n) + 2 F(n - 1)) / 5 for n >= 1; 0 for n <= 0.
/// The division is checked to be exact.
Count sigma1_path(int n);

/// sigma_1(P_n) summed edge by edge: edge i lies in sigma_0(P_{i-2}) sigma_0(P_{n-i-2})
/// one-edge subsets.
Count sigma1_path_by_edges(int n);

/// sigma_1 of a named family from its closed or path-reduced formula.
Count sigma1_family(const FamilySpec& spec);

/// Checks sigma1_family against the subset-enumeration oracle for every
/// family instance of order <= max_n, and sigma1_path against
/// sigma1_path_by_edges for 1 <= n <= path_max.
CheckResult verify_closed_forms(int max_n, int path_max = 40);

}  // namespace nearind

#endif  // NEARIND_CLOSED_FORMS_HPP
