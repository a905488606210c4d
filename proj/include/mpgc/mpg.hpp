#pragma once

// Minimal prime graph logic. A candidate h plays the complement role: h is
// an MPGC iff complement(h) is connected, h is triangle-free, h is
// 3-colorable, and no edge can be added to h without creating a triangle
// or destroying 3-colorability.

#include <map>
#include <optional>

#include "mpgc/coloring.hpp"
#include "mpgc/graph.hpp"

namespace mpgc {

struct MpgcReport {
    int order = 0;
    bool is_mpgc = false;
    bool complement_connected = false;
    bool triangle_free = false;
    std::optional<std::array<int, 3>> triangle;  // witness when not triangle-free
    bool three_colorable = false;
    std::optional<VertexColoring> coloring;
    bool maximal = false;
    std::optional<Edge> violating_pair;  // addable non-edge when not maximal
    bool connected = false;              // h's own connectivity; a theorem, not a membership condition
};

inline MpgcReport check_mpgc(const Graph& h) {
    if (h.order() < 2) throw std::invalid_argument("MPGC candidates need at least 2 vertices");
    MpgcReport r;
    r.order = h.order();
    r.triangle = triangle_witness(h);
    r.triangle_free = !r.triangle.has_value();
    r.coloring = three_color(h);
    r.three_colorable = r.coloring.has_value();
    r.complement_connected = is_connected(complement(h));
    r.connected = is_connected(h);

    // Maximality: every addable edge must die on a triangle or on
    // 3-colorability. Triangle first; the coloring solver only runs for
    // additions that stay triangle-free.
    r.maximal = true;
    int n = h.order();
    for (int u = 0; u < n && r.maximal; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (h.adjacent(u, v)) continue;
            if (h.neighbors(u) & h.neighbors(v)) continue;  // addition makes a triangle
            Graph added = h;
            added.add_edge(u, v);
            if (three_color(added).has_value()) {
                r.maximal = false;
                r.violating_pair = Edge{u, v};
                break;
            }
        }
    }
    r.is_mpgc = r.complement_connected && r.triangle_free && r.three_colorable && r.maximal;
    return r;
}

// MPG membership of g == MPGC membership of its complement.
inline MpgcReport check_mpg(const Graph& g) { return check_mpgc(complement(g)); }

// Smallest-index common neighbor of a differently-colored non-edge (u,v)
// of an MPGC. Maximality forces one to exist (adding (u,v) cannot break
// 3-colorability when the endpoints already differ under c); nullopt on a
// graph where it does not is a theorem-check failure.
inline std::optional<int> find_blocker(const Graph& h, const VertexColoring& c, int u, int v) {
    if (u < 0 || u >= h.order() || v < 0 || v >= h.order() || u == v)
        throw std::invalid_argument("find_blocker: bad vertex pair");
    if (h.adjacent(u, v)) throw std::invalid_argument("find_blocker: (u,v) is an edge");
    if (static_cast<int>(c.color.size()) != h.order())
        throw std::invalid_argument("find_blocker: coloring is not total on h");
    if (c.color[static_cast<size_t>(u)] == c.color[static_cast<size_t>(v)])
        throw std::invalid_argument("find_blocker: endpoints share a color; no blocker is guaranteed");
    uint64_t common = h.neighbors(u) & h.neighbors(v);
    if (!common) return std::nullopt;
    return std::countr_zero(common);
}

struct CycleCover {
    // one witness per covered edge (all witnesses under the all flag)
    std::map<Edge, std::vector<CycleWitness>> covered;
    std::vector<Edge> uncovered;
};

inline CycleCover five_cycle_cover(const Graph& h, bool all_witnesses = false) {
    CycleCover cover;
    for (Edge e : h.edges()) {
        auto found = cycles_through_edge(h, e, 5, /*first_only=*/!all_witnesses);
        if (found.empty())
            cover.uncovered.push_back(e);
        else
            cover.covered.emplace(e, std::move(found));
    }
    return cover;
}

struct StructureReport {
    bool connected = false;
    int min_degree = 0;
    bool min_degree_ok = false;
    std::optional<int> diameter_value;  // nullopt = infinite
    bool diameter_ok = false;
    std::optional<CycleWitness> induced_c5;
    bool induced_c5_ok = false;

    bool all_ok() const { return connected && min_degree_ok && diameter_ok && induced_c5_ok; }
};

// The structural facts every MPGC must satisfy: connected, min degree >= 2,
// diameter 2 or 3, and an induced 5-cycle.
inline StructureReport check_structure(const Graph& h) {
    StructureReport s;
    s.connected = is_connected(h);
    s.min_degree = min_degree(h);
    s.min_degree_ok = s.min_degree >= 2;
    s.diameter_value = diameter(h);
    s.diameter_ok = s.diameter_value && (*s.diameter_value == 2 || *s.diameter_value == 3);
    s.induced_c5 = has_induced_c5(h);
    s.induced_c5_ok = s.induced_c5.has_value();
    return s;
}

// All simple k-cycles, one witness per cycle up to rotation and
// reflection: the witness starts at the cycle's smallest vertex and its
// second entry is smaller than its last.
inline std::vector<CycleWitness> simple_cycles(const Graph& g, int k) {
    if (k < 3) throw std::invalid_argument("simple_cycles: cycle length must be >= 3");
    std::vector<CycleWitness> out;
    int n = g.order();
    std::vector<int> path;
    for (int s = 0; s + k <= n; ++s) {
        path.assign(1, s);
        uint64_t used = uint64_t{1} << s;
        uint64_t allowed = g.vertex_mask() & (~uint64_t{0} << 1 << s);  // only vertices > s
        auto dfs = [&](auto&& self, int last) -> void {
            if (static_cast<int>(path.size()) == k) {
                if (g.adjacent(last, s) && path[1] < path[static_cast<size_t>(k - 1)])
                    out.push_back(CycleWitness{path});
                return;
            }
            uint64_t cand = g.neighbors(last) & allowed & ~used;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                path.push_back(v);
                used |= uint64_t{1} << v;
                self(self, v);
                used &= ~(uint64_t{1} << v);
                path.pop_back();
            }
        };
        dfs(dfs, s);
    }
    return out;
}

struct CycleLemmaViolation {
    CycleWitness cycle;
    Edge edge;
};

struct CycleLemmaReport {
    int k = 0;
    int cycle_count = 0;
    std::vector<CycleLemmaViolation> violations;
    // k == 7 only: per-cycle tag of whether each color appears at least
    // twice under the deterministic three_color coloring
    int precondition_held = 0;
    int precondition_missed = 0;

    bool pass() const { return violations.empty(); }
};

// Checks that every edge of every simple k-cycle of h lies on a 5-cycle of
// h. Intended for graphs passing check_mpgc; k must be 4, 6 or 7.
inline CycleLemmaReport check_cycle_lemma(const Graph& h, int k) {
    if (k != 4 && k != 6 && k != 7) throw std::invalid_argument("check_cycle_lemma: k must be 4, 6 or 7");
    CycleLemmaReport report;
    report.k = k;

    // an edge either lies on some 5-cycle of h or it does not; compute once
    std::map<Edge, bool> edge_covered;
    for (Edge e : h.edges()) edge_covered[e] = !cycles_through_edge(h, e, 5, /*first_only=*/true).empty();

    std::optional<VertexColoring> coloring;
    if (k == 7) coloring = three_color(h);

    auto cycles = simple_cycles(h, k);
    report.cycle_count = static_cast<int>(cycles.size());
    for (const auto& cyc : cycles) {
        for (int i = 0; i < k; ++i) {
            Edge e = make_edge(cyc.vertices[static_cast<size_t>(i)], cyc.vertices[static_cast<size_t>((i + 1) % k)]);
            if (!edge_covered[e]) report.violations.push_back({cyc, e});
        }
        if (k == 7 && coloring) {
            auto counts = color_counts_on(*coloring, cyc.vertices);
            bool held = counts[0] >= 2 && counts[1] >= 2 && counts[2] >= 2;
            (held ? report.precondition_held : report.precondition_missed)++;
        }
    }
    return report;
}

// Adds a non-adjacent twin of v: a new vertex with exactly v's
// neighborhood. On the MPGC side twins stay non-adjacent, so the twin pair
// becomes an edge of the MPG.
inline Graph duplicate_vertex(const Graph& h, int v) {
    if (v < 0 || v >= h.order()) throw std::invalid_argument("duplicate_vertex: vertex out of range");
    if (h.order() + 1 > Graph::kMaxOrder) throw std::invalid_argument("duplicate_vertex: 64-vertex limit");
    Graph out(h.order() + 1);
    for (Edge e : h.edges()) out.add_edge(e.first, e.second);
    uint64_t nb = h.neighbors(v);
    while (nb) {
        out.add_edge(h.order(), std::countr_zero(nb));
        nb &= nb - 1;
    }
    return out;
}

// Edges of the MPG (= complement of h) through which no 5-cycle of the MPG
// passes. Empty for many MPGCs but not all: the twin edge of a duplicated
// vertex is the standard exception.
inline std::vector<Edge> mpg_uncovered_edges(const Graph& h) {
    return five_cycle_cover(complement(h)).uncovered;
}

}  // namespace mpgc
