#ifndef NEARIND_CANONICAL_HPP
#define NEARIND_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nearind/graph.hpp"

namespace nearind {

inline constexpr int kCanonicalMaxOrder = 10;

/// Isomorphism-invariant encoding of a graph with at most 10 vertices.
///
/// `bits` holds the upper triangle of the canonically relabeled adjacency
/// matrix in row order (0,1), (0,2), ..., (n-2,n-1), first pair in the most
/// significant position. Two graphs have equal codes iff they are isomorphic.
class CanonicalCode {
public:
    constexpr CanonicalCode() noexcept = default;
    constexpr CanonicalCode(int order, std::uint64_t bits) noexcept : order_(order), bits_(bits) {}

    constexpr int order() const noexcept { return order_; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// The canonical representative (relabeled graph) this code describes.
    Graph to_graph() const;
    /// graph6 string of the canonical representative.
    std::string graph6() const;

    friend constexpr bool operator==(const CanonicalCode&, const CanonicalCode&) noexcept = default;
    friend constexpr auto operator<=>(const CanonicalCode&, const CanonicalCode&) noexcept = default;

private:
    int order_ = 0;
    std::uint64_t bits_ = 0;
};

/// Minimum code over the leaves of an individualization-refinement search
/// (equitable partition refinement seeded by degree, twin pruning).
CanonicalCode canonical_code(const Graph& g);

/// The canonically relabeled copy of g.
Graph canonical_form(const Graph& g);

/// Code of g under its current labeling (no relabeling).
CanonicalCode code_of_labeling(const Graph& g);

}  // namespace nearind

template <>
struct std::hash<nearind::CanonicalCode> {
    std::size_t operator()(const nearind::CanonicalCode& c) const noexcept {
        return std::hash<std::uint64_t>{}(c.bits() * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(c.order()));
    }
};

#endif  // NEARIND_CANONICAL_HPP
