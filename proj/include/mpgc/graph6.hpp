#pragma once

// graph6 text encoding, single-byte order form only (1..62 vertices).
// Layout: first byte is order+63; then the upper-triangular adjacency bits
// in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed into
// 6-bit groups (first bit is the group's most significant), each emitted
// as group+63. Multi-byte order prefixes ('~') are rejected.

#include <string>
#include <string_view>

#include "mpgc/graph.hpp"

namespace mpgc {

inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n < 1 || n > 62)
        throw std::invalid_argument("graph6 single-byte form requires order in [1, 62], got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

inline Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty string");
    for (char ch : s) {
        int v = static_cast<unsigned char>(ch);
        if (v < 63 || v > 126) throw std::invalid_argument("graph6: byte outside printable range 63..126");
    }
    if (s[0] == '~') throw std::invalid_argument("graph6: multi-byte order (>= 63 vertices) not supported");
    int n = s[0] - 63;
    if (n < 1) throw std::invalid_argument("graph6: order 0 not supported");

    int bits = n * (n - 1) / 2;
    size_t expected = 1 + static_cast<size_t>((bits + 5) / 6);
    if (s.size() != expected)
        throw std::invalid_argument("graph6: payload is " + std::to_string(s.size() - 1) + " bytes, expected " +
                                    std::to_string(expected - 1) + " for order " + std::to_string(n));

    Graph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int byte = s[static_cast<size_t>(1 + idx / 6)] - 63;
            if ((byte >> (5 - idx % 6)) & 1) g.add_edge(u, v);
        }
    }
    // trailing pad bits must be zero
    for (int pad = bits; pad < (bits + 5) / 6 * 6; ++pad) {
        int byte = s[static_cast<size_t>(1 + pad / 6)] - 63;
        if ((byte >> (5 - pad % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace mpgc
