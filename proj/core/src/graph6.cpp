#include "nearind/graph6.hpp"

#include <vector>

namespace nearind {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(char ch) {
    const int v = static_cast<unsigned char>(ch) - kBias;
    if (v < 0 || v > 63) {
        throw Graph6Error("graph6 byte '" + std::string(1, ch) + "' outside the printable range 63..126");
    }
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw Graph6Error("empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw Graph6Error("graph6 order exceeds 64");
        if (text.size() < 4) throw Graph6Error("truncated graph6 long-form header");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_byte(text[i]);
        if (n < 63) throw Graph6Error("graph6 long-form header used for n < 63");
        pos = 4;
    } else {
        n = decode_byte(text[0]);
        pos = 1;
    }
    if (n > Graph::kMaxOrder) throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds 64");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos < body) throw Graph6Error("truncated graph6 adjacency data");
    if (text.size() - pos > body) throw Graph6Error("trailing data after graph6 adjacency bits");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = decode_byte(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) {
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = decode_byte(text[pos + body - 1]);
        if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero padding bits in graph6 data");
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<int>((g.adjacency()[static_cast<std::size_t>(i)] >> j) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

}  // namespace nearind
