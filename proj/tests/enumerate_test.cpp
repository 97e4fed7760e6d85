#include <gtest/gtest.h>

#include <set>

#include "nearind/enumerate.hpp"
#include "nearind/guard.hpp"

namespace nearind {
namespace {

TEST(EnumerateTest, ClassCounts) {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(enumerate_codes(n).size(), expected[n]) << n;
}

TEST(EnumerateTest, ConnectedCounts) {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(enumerate_codes(n, GraphFilter::connected()).size(), expected[n]) << n;
}

TEST(EnumerateTest, ConnectedOrderNine) {
    EXPECT_EQ(enumerate_codes(9, GraphFilter::connected()).size(), 261080U);
}

TEST(EnumerateTest, SizeFilter) {
    // order 5 by edge count: 1 1 2 4 6 6 6 4 2 1 1
    const std::size_t expected[] = {1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1};
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(enumerate_codes(5, GraphFilter::with_size(m)).size(), expected[m]);
    EXPECT_TRUE(enumerate_codes(5, GraphFilter::with_size(11)).empty());
}

TEST(EnumerateTest, MaskScanAgreesWithExtension) {
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(enumerate_codes_by_masks(n), enumerate_codes_by_extension(n, false));
        std::vector<CanonicalCode> connected;
        for (const auto& c : enumerate_codes_by_masks(n)) {
            if (GraphFilter::connected().accepts(c.to_graph())) connected.push_back(c);
        }
        EXPECT_EQ(connected, enumerate_codes_by_extension(n, true)) << n;
    }
}

TEST(EnumerateTest, SortedDistinctAndCanonical) {
    const auto codes = enumerate_codes(7);
    EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
    EXPECT_EQ(std::set<CanonicalCode>(codes.begin(), codes.end()).size(), codes.size());
    for (const auto& c : codes) EXPECT_EQ(canonical_code(c.to_graph()), c);
}

TEST(EnumerateTest, IndependentOfWorkerCount) {
    EXPECT_EQ(enumerate_codes(7, {}, 1), enumerate_codes(7, {}, 3));
    EXPECT_EQ(enumerate_codes(8, {}, 1), enumerate_codes(8, {}, 4));
}

TEST(EnumerateTest, Guards) {
    EXPECT_THROW(enumerate_codes(9), GuardExceeded);
    EXPECT_THROW(enumerate_codes(10, GraphFilter::connected()), GuardExceeded);
    EXPECT_THROW(enumerate_codes_by_masks(8), GuardExceeded);
    EXPECT_TRUE(enumerate_codes(-1).empty());
}

TEST(GraphFilterTest, Describe) {
    EXPECT_EQ(GraphFilter::all().describe(), "all");
    EXPECT_EQ(GraphFilter::connected().describe(), "connected");
    EXPECT_EQ(GraphFilter::with_size(3).describe(), "size=3");
}

}  // namespace
}  // namespace nearind
