#ifndef NEARIND_ENUMERATE_HPP
#define NEARIND_ENUMERATE_HPP

#include <string>
#include <vector>

#include "nearind/canonical.hpp"
#include "nearind/graph.hpp"

namespace nearind {

inline constexpr int kEnumerateAllMaxOrder = 8;
inline constexpr int kEnumerateConnectedMaxOrder = 9;
/// Largest order enumerated by scanning every upper-triangle mask.
inline constexpr int kMaskScanMaxOrder = 6;

struct GraphFilter {
    enum class Kind { All, Connected, Size };
    Kind kind = Kind::All;
    int size = 0;  // edge count, for Kind::Size

    static GraphFilter all() { return {}; }
    static GraphFilter connected() { return {Kind::Connected, 0}; }
    static GraphFilter with_size(int m) { return {Kind::Size, m}; }

    bool accepts(const Graph& g) const;
    /// "all", "connected" or "size=m".
    std::string describe() const;
};

/// One code per isomorphism class of order n, by scanning all 2^(n(n-1)/2)
/// labeled graphs. Sorted ascending.
std::vector<CanonicalCode> enumerate_codes_by_masks(int n);

/// One code per isomorphism class of order n, by adding a vertex with every
/// possible neighborhood to each class of order n-1 and deduplicating. With
/// `connected_only`, parents are connected and the new vertex gets at least
/// one neighbor, which reaches every connected graph through a non-cut
/// vertex. Sorted ascending.
std::vector<CanonicalCode> enumerate_codes_by_extension(int n, bool connected_only, int jobs = 1);

/// Isomorphism-class codes of order n passing `filter`, sorted ascending.
/// Uses the mask scan for n <= 6 and extension above.
std::vector<CanonicalCode> enumerate_codes(int n, GraphFilter filter = {}, int jobs = 1);

/// Canonical representatives of order n passing `filter`, in code order.
std::vector<Graph> enumerate_graphs(int n, GraphFilter filter = {}, int jobs = 1);

}  // namespace nearind

#endif  // NEARIND_ENUMERATE_HPP
