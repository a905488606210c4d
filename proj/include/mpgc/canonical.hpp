#pragma once

// Canonical forms for isomorphism rejection: the encoding is the minimum
// upper-triangular adjacency bit-sequence over all vertex orderings
// consistent with an iterated degree-partition refinement. Two graphs get
// the same form iff they are isomorphic (the minimizing ordering is an
// explicit relabeling, so equality is sound in both directions).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "mpgc/graph.hpp"

namespace mpgc {

inline constexpr int kMaxCanonicalOrder = 16;

struct CanonicalForm {
    int order = 0;
    std::array<uint64_t, 2> bits{0, 0};  // upper triangle, column-major

    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
    size_t operator()(const CanonicalForm& f) const {
        uint64_t h = static_cast<uint64_t>(f.order) * 0x9e3779b97f4a7c15ull;
        for (uint64_t w : f.bits) h = (h ^ w) * 0x9e3779b97f4a7c15ull;
        return static_cast<size_t>(h);
    }
};

namespace detail {

// Iterated refinement: split cells by (cell, sorted neighbor-cell multiset)
// until stable. Cell order depends only on isomorphism-invariant
// signatures, never on vertex ids.
inline std::vector<int> refine_partition(const Graph& g) {
    int n = g.order();
    std::vector<int> cell(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cell[static_cast<size_t>(v)] = g.degree(v);
    // normalize to dense cell indices ordered by signature
    auto renumber = [&](std::vector<std::vector<int>>& sigs) {
        std::vector<std::vector<int>> uniq = sigs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        std::vector<int> out(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto it = std::lower_bound(uniq.begin(), uniq.end(), sigs[static_cast<size_t>(v)]);
            out[static_cast<size_t>(v)] = static_cast<int>(it - uniq.begin());
        }
        sigs.clear();
        return std::pair{out, static_cast<int>(uniq.size())};
    };

    int cell_count = 0;
    {
        std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) sigs[static_cast<size_t>(v)] = {cell[static_cast<size_t>(v)]};
        std::tie(cell, cell_count) = renumber(sigs);
    }
    for (;;) {
        std::vector<std::vector<int>> sigs(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& s = sigs[static_cast<size_t>(v)];
            s.push_back(cell[static_cast<size_t>(v)]);
            uint64_t nb = g.neighbors(v);
            std::vector<int> ncells;
            while (nb) {
                ncells.push_back(cell[static_cast<size_t>(std::countr_zero(nb))]);
                nb &= nb - 1;
            }
            std::sort(ncells.begin(), ncells.end());
            s.insert(s.end(), ncells.begin(), ncells.end());
        }
        auto [next, count] = renumber(sigs);
        if (count == cell_count) return next;
        cell = std::move(next);
        cell_count = count;
    }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw std::length_error("canonical_form supports order <= " + std::to_string(kMaxCanonicalOrder) +
                                ", got " + std::to_string(n));
    if (n <= 1) return CanonicalForm{n, {0, 0}};

    std::vector<int> cell = detail::refine_partition(g);

    // positions 0..n-1 are filled cell by cell; chunk[p] holds the
    // adjacency bits of the vertex at position p against positions 0..p-1
    std::vector<uint32_t> best(static_cast<size_t>(n), 0), cur(static_cast<size_t>(n), 0);
    bool have_best = false;
    std::vector<int> placed;
    placed.reserve(static_cast<size_t>(n));
    uint64_t used = 0;

    // cell id expected at each position: sort vertices by cell to fix ranges
    std::vector<int> cell_at_pos(static_cast<size_t>(n));
    {
        std::vector<int> order_by_cell(static_cast<size_t>(n));
        std::iota(order_by_cell.begin(), order_by_cell.end(), 0);
        std::stable_sort(order_by_cell.begin(), order_by_cell.end(),
                         [&](int u, int v) { return cell[static_cast<size_t>(u)] < cell[static_cast<size_t>(v)]; });
        for (int p = 0; p < n; ++p) cell_at_pos[static_cast<size_t>(p)] = cell[static_cast<size_t>(order_by_cell[static_cast<size_t>(p)])];
    }

    // transposition (u w) is an automorphism iff u,w agree everywhere else
    auto twins = [&](int u, int w) {
        uint64_t mu = g.neighbors(u) & ~(uint64_t{1} << w);
        uint64_t mw = g.neighbors(w) & ~(uint64_t{1} << u);
        return mu == mw;
    };

    // state: true while cur == best on all chunks so far
    auto dfs = [&](auto&& self, int p, bool tied) -> void {
        if (p == n) {
            best = cur;
            have_best = true;
            return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (cell[static_cast<size_t>(v)] != cell_at_pos[static_cast<size_t>(p)]) continue;
            if ((used >> v) & 1u) continue;
            bool skip = false;
            for (int t : tried)
                if (twins(t, v)) { skip = true; break; }
            if (skip) continue;
            tried.push_back(v);

            uint32_t chunk = 0;
            for (int q = 0; q < p; ++q)
                if (g.adjacent(placed[static_cast<size_t>(q)], v)) chunk |= uint32_t{1} << q;

            bool child_tied = tied;
            if (have_best && tied) {
                if (chunk > best[static_cast<size_t>(p)]) continue;  // never better than best
                child_tied = (chunk == best[static_cast<size_t>(p)]);
            }
            cur[static_cast<size_t>(p)] = chunk;
            placed.push_back(v);
            used |= uint64_t{1} << v;
            self(self, p + 1, child_tied);
            used &= ~(uint64_t{1} << v);
            placed.pop_back();
            // a completed descendant replaced best; our prefix is its prefix
            tied = true;
        }
    };
    dfs(dfs, 0, true);

    CanonicalForm form{n, {0, 0}};
    int bit = 0;
    for (int p = 1; p < n; ++p)
        for (int q = 0; q < p; ++q, ++bit)
            if ((best[static_cast<size_t>(p)] >> q) & 1u)
                form.bits[static_cast<size_t>(bit / 64)] |= uint64_t{1} << (bit % 64);
    return form;
}

// Rebuild the canonically labeled graph from its form.
inline Graph graph_from_canonical(const CanonicalForm& f) {
    Graph g(f.order);
    int bit = 0;
    for (int p = 1; p < f.order; ++p)
        for (int q = 0; q < p; ++q, ++bit)
            if ((f.bits[static_cast<size_t>(bit / 64)] >> (bit % 64)) & 1u) g.add_edge(q, p);
    return g;
}

}  // namespace mpgc
