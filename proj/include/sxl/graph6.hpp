#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sxl/graph.hpp"

namespace sxl {

/// graph6 writer. Single-byte size tier only (n <= 62); upper-triangle bits
/// in column-major order, packed big-endian into 6-bit groups offset by 63.
/// No trailing newline.
inline std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw SizeUnsupported("graph6 writer limited to 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (group << (6 - nbits))));
    return out;
}

/// graph6 parser. Accepts the optional ">>graph6<<" header and both the
/// single-byte and the '~'-prefixed long size form, rejecting n > 64.
inline Graph parse_graph6(std::string_view line) {
    // strip header and trailing newline garbage
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw MalformedGraph6("empty graph6 string");

    auto byte_at = [&](size_t i) -> int {
        const unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw MalformedGraph6("byte out of graph6 range at position " + std::to_string(i));
        return c - 63;
    };

    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw SizeUnsupported("8-byte graph6 size tier not supported");
        if (line.size() < 4) throw MalformedGraph6("truncated long size field");
        n = (static_cast<long>(byte_at(1)) << 12) | (static_cast<long>(byte_at(2)) << 6) |
            byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw SizeUnsupported("graph6 string encodes " + std::to_string(n) + " vertices");

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t need = (nbits + 5) / 6;
    if (line.size() - pos != need)
        throw MalformedGraph6("adjacency bit field has wrong length");

    std::vector<std::pair<int, int>> es;
    size_t bit = 0;
    int i = 0, j = 1;
    for (size_t k = 0; k < need; ++k) {
        const int group = byte_at(pos + k);
        for (int b = 5; b >= 0 && bit < nbits; --b, ++bit) {
            if ((group >> b) & 1) es.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return build_graph(static_cast<int>(n), es);
}

} // namespace sxl
