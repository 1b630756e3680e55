#pragma once

#include <map>

#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/rng.hpp"

namespace pab {

// Replace each listed edge uv (length L) by an induced path of L edges
// through L-1 fresh vertices.  Length 1 leaves the edge alone, so a graph is
// a subdivision of itself.  Fresh vertices are appended after the original
// ids, in the (sorted) order the edges are processed, so the output is fully
// determined by the input.
inline Graph gen_subdivision(const Graph& g, const std::map<std::pair<int, int>, int>& lengths) {
    int n = g.vertex_count();
    std::map<std::pair<int, int>, int> normalised;
    for (const auto& [edge, len] : lengths) {
        auto [u, v] = edge;
        if (len < 1) throw PreconditionError("gen_subdivision: length must be >= 1");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("gen_subdivision: endpoint out of range");
        if (u > v) std::swap(u, v);
        if (!g.adjacent(u, v))
            throw PreconditionError("gen_subdivision: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
        normalised[{u, v}] = len;
    }

    EdgeList edges;
    int next_fresh = n;
    for (auto [u, v] : g.edges()) {
        auto it = normalised.find({u, v});
        int len = it == normalised.end() ? 1 : it->second;
        if (len == 1) {
            edges.emplace_back(u, v);
            continue;
        }
        int prev = u;
        for (int k = 0; k < len - 1; ++k) {
            edges.emplace_back(prev, next_fresh);
            prev = next_fresh++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next_fresh, edges);
}

// Subdivide every edge by an independently drawn length in [lmin, lmax].
inline Graph gen_subdivision_random(const Graph& g, int lmin, int lmax, std::uint64_t seed) {
    if (lmin < 1 || lmax < lmin)
        throw PreconditionError("gen_subdivision_random: need 1 <= lmin <= lmax");
    SplitMix64 rng(seed);
    std::map<std::pair<int, int>, int> lengths;
    for (auto e : g.edges()) lengths[e] = lmin + rng.next_below(lmax - lmin + 1);
    return gen_subdivision(g, lengths);
}

// Complete multipartite graph; part i occupies a consecutive id block.
inline Graph gen_complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw PreconditionError("gen_complete_multipartite: no part sizes");
    for (int s : sizes)
        if (s < 1) throw PreconditionError("gen_complete_multipartite: part size must be >= 1");
    int n = 0;
    std::vector<int> offset;
    for (int s : sizes) {
        offset.push_back(n);
        n += s;
    }
    EdgeList edges;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            for (int u = 0; u < sizes[i]; ++u)
                for (int v = 0; v < sizes[j]; ++v)
                    edges.emplace_back(offset[i] + u, offset[j] + v);
    return Graph(n, edges);
}

// Erdos-Renyi G(n, p) on the SplitMix64 stream: pair (u,v), u < v, taken in
// lexicographic order, one draw per pair.  Identical (n, p, seed) always
// yields the identical graph.
inline Graph gen_random(int n, double p, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("gen_random: n must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("gen_random: p must be in [0,1]");
    SplitMix64 rng(seed);
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph gen_path(int n) {
    EdgeList edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw PreconditionError("gen_cycle: need n >= 3");
    EdgeList edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph gen_complete(int n) {
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace pab
