#pragma once

// Test-support: exhaustive catalogs of graphs up to isomorphism, plus a
// standalone isomorphism test.  Deliberately independent of the library's
// search code -- this is oracle-side machinery.

#include <map>
#include <vector>

#include "pab/graph.hpp"

namespace pab_test {

using pab::Graph;
using pab::VertexList;

// Backtracking isomorphism check with degree pruning.
inline bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || da[v] != db[cand]) continue;
            bool ok = true;
            for (int w = 0; w < v; ++w)
                if (a.adjacent(v, w) != b.adjacent(cand, map[w])) { ok = false; break; }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (self(self, v + 1)) return true;
            used[cand] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

namespace detail {

// cheap invariant for bucketing candidates before the exact isomorphism test
struct Invariant {
    int n, m;
    std::vector<int> degree_sequence;
    std::vector<std::pair<int, std::vector<int>>> local; // (degree, sorted nbr degrees)
    std::vector<int> triangles_per_vertex;

    bool operator<(const Invariant& other) const {
        if (n != other.n) return n < other.n;
        if (m != other.m) return m < other.m;
        if (degree_sequence != other.degree_sequence)
            return degree_sequence < other.degree_sequence;
        if (triangles_per_vertex != other.triangles_per_vertex)
            return triangles_per_vertex < other.triangles_per_vertex;
        return local < other.local;
    }
};

inline Invariant invariant_of(const Graph& g) {
    Invariant inv;
    inv.n = g.vertex_count();
    inv.m = g.edge_count();
    for (int v = 0; v < inv.n; ++v) inv.degree_sequence.push_back(g.degree(v));
    std::sort(inv.degree_sequence.begin(), inv.degree_sequence.end());
    for (int v = 0; v < inv.n; ++v) {
        std::vector<int> nbr_degs;
        int tri = 0;
        VertexList nbrs = g.neighbours(v);
        for (int u : nbrs) nbr_degs.push_back(g.degree(u));
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.adjacent(nbrs[i], nbrs[j])) ++tri;
        std::sort(nbr_degs.begin(), nbr_degs.end());
        inv.local.emplace_back(g.degree(v), std::move(nbr_degs));
        inv.triangles_per_vertex.push_back(tri);
    }
    std::sort(inv.local.begin(), inv.local.end());
    std::sort(inv.triangles_per_vertex.begin(), inv.triangles_per_vertex.end());
    return inv;
}

} // namespace detail

// All graphs on exactly n vertices up to isomorphism, built by extending the
// (n-1)-catalog one vertex at a time and deduplicating within invariant
// buckets.  Counts match the known sequence 1, 2, 4, 11, 34, 156, 1044,
// 12346 for n = 1..8.
inline const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> result;
    if (n == 0) {
        result.push_back(Graph(0));
    } else {
        const std::vector<Graph>& smaller = all_graphs(n - 1);
        std::map<detail::Invariant, std::vector<std::size_t>> buckets;
        for (const Graph& base : smaller) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                pab::EdgeList edges = base.edges();
                for (int v = 0; v < n - 1; ++v)
                    if ((mask >> v) & 1) edges.emplace_back(v, n - 1);
                Graph candidate(n, edges);
                detail::Invariant inv = detail::invariant_of(candidate);
                bool fresh = true;
                for (std::size_t idx : buckets[inv])
                    if (isomorphic(candidate, result[idx])) { fresh = false; break; }
                if (fresh) {
                    buckets[inv].push_back(result.size());
                    result.push_back(std::move(candidate));
                }
            }
        }
    }
    return cache.emplace(n, std::move(result)).first->second;
}

} // namespace pab_test
