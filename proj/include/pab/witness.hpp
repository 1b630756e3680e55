#pragma once

#include <map>
#include <set>
#include <string>

#include "pab/graph.hpp"

namespace pab {

// Certificate that a host graph contains an induced subdivision of a pattern:
// an injective branch-vertex map plus, for every pattern edge, the host path
// realising it (endpoints included).  Valid iff the union of branch images
// and path interiors induces exactly the subdivided pattern in the host.
struct SubdivisionWitness {
    std::vector<int> branch_map;                   // pattern vertex -> host vertex
    std::map<std::pair<int, int>, VertexList> paths; // pattern edge (u<v) -> host path
};

struct WitnessCheck {
    bool ok = true;
    std::string clause; // names the violated invariant when !ok

    explicit operator bool() const { return ok; }
};

// Checks every witness invariant by direct enumeration.  This deliberately
// shares no code with the subdivision search: it only reads the host's
// adjacency relation.
inline WitnessCheck validate_witness(const Graph& pattern, const Graph& host,
                                     const SubdivisionWitness& w) {
    auto fail = [](std::string clause) { return WitnessCheck{false, std::move(clause)}; };

    int pn = pattern.vertex_count();
    if ((int)w.branch_map.size() != pn) return fail("branch map does not cover the pattern");
    std::set<int> images;
    for (int v : w.branch_map) {
        if (v < 0 || v >= host.vertex_count()) return fail("branch image out of range");
        if (!images.insert(v).second) return fail("branch map not injective");
    }

    // path keys must be exactly the pattern's edges
    for (const auto& [edge, path] : w.paths) {
        auto [u, v] = edge;
        if (u < 0 || v < 0 || u >= pn || v >= pn || u >= v)
            return fail("path key is not a normalised pattern edge");
        if (!pattern.adjacent(u, v)) return fail("path key is not a pattern edge");
        (void)path;
    }
    for (auto [u, v] : pattern.edges())
        if (!w.paths.count({u, v})) return fail("pattern edge has no path");

    // per-path checks plus global interior disjointness
    std::set<int> interiors;
    std::set<std::pair<int, int>> expected; // host edges of the subdivided copy
    for (const auto& [edge, path] : w.paths) {
        auto [u, v] = edge;
        if (path.size() < 2) return fail("path shorter than one edge");
        if (path.front() != w.branch_map[u] || path.back() != w.branch_map[v])
            return fail("path endpoint mismatch");
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int x = path[i], y = path[i + 1];
            if (x < 0 || x >= host.vertex_count() || y < 0 || y >= host.vertex_count())
                return fail("path vertex out of range");
            if (!host.adjacent(x, y)) return fail("consecutive path vertices not adjacent");
            expected.insert({std::min(x, y), std::max(x, y)});
        }
        std::set<int> own;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int x = path[i];
            if (!own.insert(x).second) return fail("path revisits a vertex");
            if (images.count(x)) return fail("path interior hits a branch image");
            if (!interiors.insert(x).second) return fail("paths not internally disjoint");
        }
    }

    // the union must induce exactly the subdivided pattern
    VertexList all(images.begin(), images.end());
    all.insert(all.end(), interiors.begin(), interiors.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            bool host_edge = host.adjacent(all[i], all[j]);
            bool wanted = expected.count({all[i], all[j]}) > 0;
            if (host_edge && !wanted)
                return fail("non-adjacency violated: host edge (" + std::to_string(all[i]) + "," +
                            std::to_string(all[j]) + ") is not on any path");
            if (!host_edge && wanted) return fail("required adjacency missing");
        }
    return {};
}

} // namespace pab
