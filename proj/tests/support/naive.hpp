#pragma once

// Test-support: brute-force oracles.  Each one re-derives a result by plain
// enumeration, with no code shared with the implementation path it checks.

#include <map>
#include <optional>
#include <vector>

#include "catalog.hpp"
#include "pab/graph.hpp"

namespace pab_test {

// ---------------------------------------------------------------------------
// Induced-subdivision containment by subset enumeration
// ---------------------------------------------------------------------------

// Every subdivision of `pattern` with exactly `total` vertices, up to
// isomorphism: distribute the extra vertices over the edges in all ways.
inline const std::vector<Graph>& subdivided_patterns(const Graph& pattern, int total) {
    static std::map<std::pair<std::vector<std::pair<int, int>>, int>, std::vector<Graph>> cache;
    auto key = std::make_pair(pattern.edges(), total);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Graph> result;
    int extras = total - pattern.vertex_count();
    if (extras >= 0) {
        pab::EdgeList edges = pattern.edges();
        std::vector<int> lengths(edges.size(), 1);
        auto emit = [&]() {
            pab::EdgeList out;
            int fresh = pattern.vertex_count();
            for (std::size_t e = 0; e < edges.size(); ++e) {
                int prev = edges[e].first;
                for (int k = 1; k < lengths[e]; ++k) {
                    out.emplace_back(prev, fresh);
                    prev = fresh++;
                }
                out.emplace_back(prev, edges[e].second);
            }
            Graph candidate(total, out);
            for (const Graph& seen : result)
                if (isomorphic(candidate, seen)) return;
            result.push_back(std::move(candidate));
        };
        auto distribute = [&](auto&& self, std::size_t e, int remaining) -> void {
            if (e == edges.size()) {
                if (remaining == 0) emit();
                return;
            }
            for (int extra = 0; extra <= remaining; ++extra) {
                lengths[e] = 1 + extra;
                self(self, e + 1, remaining - extra);
            }
        };
        distribute(distribute, 0, extras);
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

// Does host contain an induced subdivision of pattern?  Enumerate all vertex
// subsets, test each induced subgraph against the catalogue of subdivided
// patterns by isomorphism.
inline bool naive_contains_induced_subdivision(const Graph& pattern, const Graph& host) {
    int n = host.vertex_count();
    int base = pattern.vertex_count();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) ++size;
        if (size < base) continue;
        VertexList subset;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) subset.push_back(v);
        Graph sub = pab::induced_subgraph(host, subset).graph;
        for (const Graph& candidate : subdivided_patterns(pattern, size))
            if (isomorphic(sub, candidate)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Connectivity by exhaustive cutset enumeration
// ---------------------------------------------------------------------------

inline bool naive_connected_after_deleting(const Graph& g, const VertexList& del) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : del) gone[v] = 1;
    int start = -1, live = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) {
            if (start == -1) start = v;
            ++live;
        }
    if (live <= 1) return true;
    VertexList stack{start};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbours(v))
            if (!gone[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == live;
}

// The definition, verbatim: complete with >= k+1 vertices, or non-complete
// and no deletion of <= k-1 vertices disconnects it.
inline bool naive_is_k_connected(const Graph& g, int k) {
    int n = g.vertex_count();
    if (pab::is_complete(g)) return n >= k + 1;
    if (k <= 0) return true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        VertexList del;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) del.push_back(v);
        if ((int)del.size() > k - 1) continue;
        if (!naive_connected_after_deleting(g, del)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Colourability by unpruned enumeration
// ---------------------------------------------------------------------------

inline bool naive_k_colourable(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> colour(n, -1);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && colour[u] == c) { ok = false; break; }
            if (!ok) continue;
            colour[v] = c;
            if (self(self, v + 1)) return true;
        }
        colour[v] = -1;
        return false;
    };
    return dfs(dfs, 0);
}

inline int naive_chromatic_number(const Graph& g) {
    for (int k = 0; k <= g.vertex_count(); ++k)
        if (naive_k_colourable(g, k)) return k;
    return g.vertex_count();
}

// ---------------------------------------------------------------------------
// Reachability, independent of the library's BFS
// ---------------------------------------------------------------------------

// Transitive closure by iterated squaring of the adjacency matrix restricted
// to the surviving vertices.
inline bool naive_separated(const Graph& g, const VertexList& removed, const VertexList& from,
                            const VertexList& to) {
    int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        reach[u][u] = 1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && g.adjacent(u, v)) reach[u][v] = 1;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (reach[u][v])
                    for (int w = 0; w < n; ++w)
                        if (reach[v][w] && !reach[u][w]) {
                            reach[u][w] = 1;
                            changed = true;
                        }
    }
    for (int u : from)
        for (int v : to)
            if (!gone[u] && !gone[v] && reach[u][v]) return false;
    return true;
}

} // namespace pab_test
