#ifndef NEARIND_FAMILY_HPP
#define NEARIND_FAMILY_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nearind/graph.hpp"

namespace nearind {

/// Parametric descriptions of the named graph families.
namespace family {

struct Path { int n; };
struct Cycle { int n; };
struct Complete { int n; };
/// K_{1,n-1}
struct Star { int n; };
struct CompleteBipartite { int r; int s; };
/// C_{n-1} joined with one hub vertex.
struct Wheel { int n; };
/// P_k with n-k pendant vertices on one end-vertex.
struct Broom { int n; int k; };
/// P_k with every vertex of K_{n-k} joined to one end-vertex.
struct Lollipop { int n; int k; };
/// P_k with both ends of a P_{n-k} joined to one end-vertex of P_k.
struct Tadpole { int n; int k; };
/// K_{1,n-1} plus one edge between two leaves.
struct UnicyclicStar { int n; };
/// m K_2 union r K_1
struct MatchingPlusIsolated { int m; int r; };
struct Edgeless { int n; };

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::CompleteBipartite,
                 family::Wheel, family::Broom, family::Lollipop, family::Tadpole, family::UnicyclicStar,
                 family::MatchingPlusIsolated, family::Edgeless>;

/// Number of vertices the spec describes (no validation).
int family_order(const FamilySpec& spec);

/// Throws GraphError when the parameters are outside the family's range.
void validate(const FamilySpec& spec);

Graph construct(const FamilySpec& spec);

/// Mini-grammar `name:param[:param]`, e.g. `path:4`, `broom:7:3`, `bipartite:2:3`.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Every valid parameterization of every family with order <= max_order.
std::vector<FamilySpec> family_instances(int max_order);

}  // namespace nearind

#endif  // NEARIND_FAMILY_HPP
