#pragma once

// Named graph generators used by the CLI and as test fixtures.

#include "mpgc/graph.hpp"

namespace mpgc {

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Generalized Petersen graph P(n,k): outer cycle 0..n-1, spokes i -- n+i,
// inner edges n+i -- n+((i+k) mod n). Requires 1 <= k < n/2 so all inner
// edges are distinct simple edges.
inline Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("generalized Petersen requires n >= 3 and 1 <= k < n/2");
    if (2 * n > Graph::kMaxOrder) throw std::invalid_argument("P(n,k) exceeds the 64-vertex limit");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

inline Graph petersen_graph() { return generalized_petersen(5, 2); }

// Mycielskian of C5: triangle-free with chromatic number 4. Vertices 0..4
// form the cycle, 5..9 are the shadow vertices, 10 is the apex.
inline Graph groetzsch_graph() {
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(5 + i, 10);
    }
    return g;
}

}  // namespace mpgc
