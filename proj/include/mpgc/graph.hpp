#pragma once

// Simple undirected graphs on up to 64 vertices, stored as one 64-bit
// adjacency row per vertex so that common-neighbor and independence
// queries are single AND operations.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpgc {

using Edge = std::pair<int, int>;  // always normalized u < v

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    explicit Graph(int order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(order));
        rows_.assign(static_cast<size_t>(order), 0);
    }

    static Graph from_edges(int order, const std::vector<Edge>& edges) {
        Graph g(order);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return static_cast<int>(rows_.size()); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        rows_[static_cast<size_t>(u)] |= uint64_t{1} << v;
        rows_[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        rows_[static_cast<size_t>(u)] &= ~(uint64_t{1} << v);
        rows_[static_cast<size_t>(v)] &= ~(uint64_t{1} << u);
    }

    // Bit row of neighbors of v.
    uint64_t neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (uint64_t row : rows_) twice += std::popcount(row);
        return twice / 2;
    }

    // All edges as normalized pairs, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < order(); ++u) {
            uint64_t higher = rows_[static_cast<size_t>(u)] >> (u + 1);
            while (higher) {
                int v = u + 1 + std::countr_zero(higher);
                out.push_back({u, v});
                higher &= higher - 1;
            }
        }
        return out;
    }

    uint64_t vertex_mask() const {
        int n = order();
        return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= order())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                        std::to_string(order()));
    }

    std::vector<uint64_t> rows_;
};

inline Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("connectivity undefined on the empty graph");
    int n = g.order();
    std::vector<std::vector<int>> comps;
    uint64_t seen = 0;
    for (int s = 0; s < n; ++s) {
        if ((seen >> s) & 1u) continue;
        uint64_t comp = uint64_t{1} << s;
        uint64_t frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> vs;
        while (comp) {
            vs.push_back(std::countr_zero(comp));
            comp &= comp - 1;
        }
        comps.push_back(std::move(vs));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

// Max over vertex pairs of BFS distance; nullopt when disconnected.
inline std::optional<int> diameter(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("diameter undefined on the empty graph");
    int n = g.order();
    int best = 0;
    for (int s = 0; s < n; ++s) {
        uint64_t reached = uint64_t{1} << s;
        uint64_t frontier = reached;
        int dist = 0;
        while (reached != g.vertex_mask()) {
            uint64_t next = 0;
            uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            next &= ~reached;
            if (!next) return std::nullopt;  // unreachable vertices remain
            reached |= next;
            frontier = next;
            ++dist;
        }
        best = std::max(best, dist);
    }
    return best;
}

inline int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("min_degree undefined on the empty graph");
    int best = g.kMaxOrder;
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

// Lexicographically first triple of mutually adjacent vertices, if any.
inline std::optional<std::array<int, 3>> triangle_witness(const Graph& g) {
    int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            uint64_t common = g.neighbors(u) & g.neighbors(v);
            common >>= (v + 1);
            if (common) {
                int w = v + 1 + std::countr_zero(common);
                return std::array<int, 3>{u, v, w};
            }
        }
    }
    return std::nullopt;
}

struct CycleWitness {
    std::vector<int> vertices;  // closed cycle, consecutive (cyclically) adjacent
    bool operator==(const CycleWitness&) const = default;
};

inline bool validate_cycle(const Graph& g, const CycleWitness& w) {
    size_t k = w.vertices.size();
    if (k < 3) return false;
    uint64_t seen = 0;
    for (int v : w.vertices) {
        if (v < 0 || v >= g.order()) return false;
        if ((seen >> v) & 1u) return false;
        seen |= uint64_t{1} << v;
    }
    for (size_t i = 0; i < k; ++i)
        if (!g.adjacent(w.vertices[i], w.vertices[(i + 1) % k])) return false;
    return true;
}

// All simple k-cycles through edge e, as witnesses [a, b, w1, ..., w_{k-2}]
// with a = min(e), b = max(e). Fixing the first two entries makes the
// representation of each cycle unique, so no dedup pass is needed. DFS
// visits neighbors in ascending order, so witnesses come out in
// lexicographic order of their vertex sequence.
inline std::vector<CycleWitness> cycles_through_edge(const Graph& g, Edge e, int k, bool first_only = false) {
    auto [a, b] = make_edge(e.first, e.second);
    if (!g.adjacent(a, b)) throw std::invalid_argument("cycles_through_edge: given pair is not an edge");
    if (k < 3) throw std::invalid_argument("cycles_through_edge: cycle length must be >= 3");

    std::vector<CycleWitness> found;
    std::vector<int> path{a, b};
    uint64_t used = (uint64_t{1} << a) | (uint64_t{1} << b);

    // Extends path (ending at `last`) to length k, then closes back to a.
    auto dfs = [&](auto&& self, int last) -> bool {
        if (static_cast<int>(path.size()) == k) {
            if (g.adjacent(last, a)) {
                found.push_back(CycleWitness{path});
                if (first_only) return true;
            }
            return false;
        }
        uint64_t cand = g.neighbors(last) & ~used;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            used |= uint64_t{1} << v;
            bool stop = self(self, v);
            used &= ~(uint64_t{1} << v);
            path.pop_back();
            if (stop) return true;
        }
        return false;
    };
    dfs(dfs, b);
    return found;
}

// First 5-vertex subset (in lexicographic order) inducing exactly a
// 5-cycle, returned in cycle order. A 2-regular graph on 5 vertices is C5,
// so induced degree checks suffice.
inline std::optional<CycleWitness> has_induced_c5(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    for (int e = d + 1; e < n; ++e) {
                        uint64_t sub = (uint64_t{1} << a) | (uint64_t{1} << b) | (uint64_t{1} << c) |
                                       (uint64_t{1} << d) | (uint64_t{1} << e);
                        std::array<int, 5> vs{a, b, c, d, e};
                        bool ok = true;
                        for (int v : vs)
                            if (std::popcount(g.neighbors(v) & sub) != 2) { ok = false; break; }
                        if (!ok) continue;
                        // walk the cycle starting at a
                        std::vector<int> cyc{a};
                        uint64_t left = sub & ~(uint64_t{1} << a);
                        int cur = a;
                        while (left) {
                            int nxt = std::countr_zero(g.neighbors(cur) & left);
                            cyc.push_back(nxt);
                            left &= ~(uint64_t{1} << nxt);
                            cur = nxt;
                        }
                        return CycleWitness{cyc};
                    }
    return std::nullopt;
}

struct Bipartition {
    std::vector<uint8_t> side;  // side[v] in {0, 1}; 0 = part A

    std::pair<std::vector<int>, std::vector<int>> parts() const {
        std::pair<std::vector<int>, std::vector<int>> p;
        for (int v = 0; v < static_cast<int>(side.size()); ++v)
            (side[v] == 0 ? p.first : p.second).push_back(v);
        return p;
    }
};

// BFS 2-coloring; the smallest vertex of each component lands in part A.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int8_t> side(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<size_t>(s)] != -1) continue;
        side[static_cast<size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[static_cast<size_t>(v)] == -1) {
                    side[static_cast<size_t>(v)] = static_cast<int8_t>(1 - side[static_cast<size_t>(u)]);
                    queue.push_back(v);
                } else if (side[static_cast<size_t>(v)] == side[static_cast<size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    b.side.assign(side.begin(), side.end());
    return b;
}

}  // namespace mpgc
