#pragma once

// Exact 3-coloring. Colors are indices {0,1,2}, read as red/green/blue.

#include <algorithm>
#include <cstdint>
#include <optional>

#include "mpgc/graph.hpp"

namespace mpgc {

struct VertexColoring {
    std::vector<uint8_t> color;  // one entry per vertex, values in {0,1,2}
    bool operator==(const VertexColoring&) const = default;
};

// True iff proper. Throws on a coloring that is not total over g's
// vertices or uses a color outside {0,1,2}.
inline bool validate_coloring(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != g.order())
        throw std::invalid_argument("coloring is not total: " + std::to_string(c.color.size()) +
                                    " entries for order " + std::to_string(g.order()));
    for (uint8_t col : c.color)
        if (col > 2) throw std::invalid_argument("color index out of range {0,1,2}");
    for (auto [u, v] : g.edges())
        if (c.color[static_cast<size_t>(u)] == c.color[static_cast<size_t>(v)]) return false;
    return true;
}

// Backtracking in DSATUR order (max saturation, then max degree, then
// smallest index). Symmetry breaking: a vertex may only introduce the next
// unused color index, so the first colored vertex gets 0 and the first
// conflicting neighbor gets 1. Fully deterministic.
inline std::optional<VertexColoring> three_color(const Graph& g) {
    int n = g.order();
    VertexColoring result;
    result.color.assign(static_cast<size_t>(n), 0);
    if (n == 0) return result;

    std::vector<int8_t> assigned(static_cast<size_t>(n), -1);
    std::vector<std::array<int, 3>> nbr_color_count(static_cast<size_t>(n), {0, 0, 0});

    auto pick_vertex = [&]() {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (assigned[static_cast<size_t>(v)] != -1) continue;
            const auto& cc = nbr_color_count[static_cast<size_t>(v)];
            int sat = (cc[0] > 0) + (cc[1] > 0) + (cc[2] > 0);
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    };

    auto solve = [&](auto&& self, int remaining, int used_colors) -> bool {
        if (remaining == 0) return true;
        int v = pick_vertex();
        const auto& cc = nbr_color_count[static_cast<size_t>(v)];
        if (cc[0] > 0 && cc[1] > 0 && cc[2] > 0) return false;
        int limit = std::min(2, used_colors);  // at most one new color index
        for (int col = 0; col <= limit; ++col) {
            if (cc[col] > 0) continue;
            assigned[static_cast<size_t>(v)] = static_cast<int8_t>(col);
            uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                ++nbr_color_count[static_cast<size_t>(u)][col];
            }
            if (self(self, remaining - 1, std::max(used_colors, col + 1))) return true;
            nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                --nbr_color_count[static_cast<size_t>(u)][col];
            }
            assigned[static_cast<size_t>(v)] = -1;
        }
        return false;
    };

    if (!solve(solve, n, 0)) return std::nullopt;
    for (int v = 0; v < n; ++v) result.color[static_cast<size_t>(v)] = static_cast<uint8_t>(assigned[static_cast<size_t>(v)]);
    return result;
}

// Advance colors by `shift` inside `component_vertices`, which must be a
// union of connected components of g (otherwise rotation could break
// properness, so anything else is rejected).
inline VertexColoring rotate_component_colors(const Graph& g, const VertexColoring& c,
                                              const std::vector<int>& component_vertices, int shift) {
    if (shift != 1 && shift != 2) throw std::invalid_argument("shift must be 1 or 2");
    if (static_cast<int>(c.color.size()) != g.order())
        throw std::invalid_argument("coloring is not total on g");
    uint64_t mask = 0;
    for (int v : component_vertices) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("component vertex out of range");
        mask |= uint64_t{1} << v;
    }
    // closed under adjacency <=> union of components
    for (int v : component_vertices)
        if (g.neighbors(v) & ~mask)
            throw std::invalid_argument("vertex set is not a union of connected components");

    VertexColoring out = c;
    for (int v : component_vertices)
        out.color[static_cast<size_t>(v)] = static_cast<uint8_t>((out.color[static_cast<size_t>(v)] + shift) % 3);
    return out;
}

inline std::array<int, 3> color_counts_on(const VertexColoring& c, const std::vector<int>& vs) {
    std::array<int, 3> counts{0, 0, 0};
    for (int v : vs) {
        if (v < 0 || v >= static_cast<int>(c.color.size()))
            throw std::invalid_argument("vertex outside the colored set");
        ++counts[c.color[static_cast<size_t>(v)]];
    }
    return counts;
}

}  // namespace mpgc
