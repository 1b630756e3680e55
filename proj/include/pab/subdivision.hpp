#pragma once

#include <numeric>
#include <optional>

#include "pab/errors.hpp"
#include "pab/graph.hpp"
#include "pab/guards.hpp"
#include "pab/pattern.hpp"
#include "pab/witness.hpp"

namespace pab {

namespace detail {

// Backtracking search for an induced subdivision of `pattern` inside `host`.
//
// Phase 1 enumerates injective branch-vertex images.  Pattern non-edges must
// map to host non-edges (a subdivision keeps branch vertices of a non-edge
// non-adjacent, and the copy is induced).  A pattern edge whose images end up
// host-adjacent is forced to be realised by that single edge: any longer path
// would leave the direct edge as a chord.  Pattern edges with non-adjacent
// images are realised in phase 2 by internally disjoint induced paths, grown
// shortest-first with lexicographic tie-breaks.  The induced condition is
// checked incrementally: every vertex added to the partial copy must be
// non-adjacent to all of it except its declared path neighbours.
//
// `chains` lists groups of interchangeable pattern vertices (orbits of known
// automorphisms); their images are forced strictly increasing, which quotients
// the branch enumeration by that symmetry.
class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& pattern, const Graph& host,
                      const std::vector<VertexList>& chains)
        : pattern_(pattern), host_(host) {
        int pn = pattern_.vertex_count();
        chain_pred_.assign(pn, -1);
        for (const auto& chain : chains)
            for (std::size_t i = 1; i < chain.size(); ++i) chain_pred_[chain[i]] = chain[i - 1];

        order_.resize(pn);
        std::iota(order_.begin(), order_.end(), 0);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (pattern_.degree(a) != pattern_.degree(b))
                return pattern_.degree(a) > pattern_.degree(b);
            return a < b;
        });

        map_.assign(pn, -1);
        in_copy_.assign(host_.vertex_count(), 0);
    }

    std::optional<SubdivisionWitness> run() {
        if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
        if (assign_branch(0)) return witness_;
        return std::nullopt;
    }

private:
    bool assign_branch(std::size_t pos) {
        if (pos == order_.size()) return connect_edges();
        int p = order_[pos];
        for (int cand = 0; cand < host_.vertex_count(); ++cand) {
            if (in_copy_[cand]) continue;
            if (host_.degree(cand) < pattern_.degree(p)) continue;
            if (chain_pred_[p] != -1 && map_[chain_pred_[p]] != -1 &&
                cand <= map_[chain_pred_[p]])
                continue;
            bool ok = true;
            for (int q = 0; q < pattern_.vertex_count(); ++q) {
                if (map_[q] == -1 || q == p) continue;
                if (!pattern_.adjacent(p, q) && host_.adjacent(cand, map_[q])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_[p] = cand;
            in_copy_[cand] = 1;
            if (assign_branch(pos + 1)) return true;
            in_copy_[cand] = 0;
            map_[p] = -1;
        }
        return false;
    }

    bool connect_edges() {
        edges_ = pattern_.edges();
        witness_.branch_map = map_;
        witness_.paths.clear();
        return connect(0);
    }

    bool connect(std::size_t k) {
        if (k == edges_.size()) return true;
        auto [u, v] = edges_[k];
        int su = map_[u], sv = map_[v];
        if (host_.adjacent(su, sv)) {
            witness_.paths[{u, v}] = {su, sv};
            if (connect(k + 1)) return true;
            witness_.paths.erase({u, v});
            return false;
        }
        // iterative deepening over the path length keeps enumeration
        // shortest-first
        int free_vertices = 0;
        for (int h = 0; h < host_.vertex_count(); ++h)
            if (!in_copy_[h]) ++free_vertices;
        VertexList interior;
        for (int len = 2; len <= free_vertices + 1; ++len) {
            if (grow_path(k, su, sv, len, interior)) return true;
        }
        return false;
    }

    // extend the path for edge k; `interior` holds the interiors placed so
    // far, the next vertex attaches to its back (or to su when empty)
    bool grow_path(std::size_t k, int su, int sv, int len, VertexList& interior) {
        int prev = interior.empty() ? su : interior.back();
        bool closing = (int)interior.size() == len - 2; // next interior is the last one
        for (int cand = 0; cand < host_.vertex_count(); ++cand) {
            if (in_copy_[cand]) continue;
            if (!host_.adjacent(cand, prev)) continue;
            bool adj_target = host_.adjacent(cand, sv);
            if (closing != adj_target) continue;
            bool ok = true;
            for (int h = 0; h < host_.vertex_count(); ++h) {
                if (!in_copy_[h] || h == prev || h == sv) continue;
                if (host_.adjacent(cand, h)) { ok = false; break; }
            }
            if (!ok) continue;
            interior.push_back(cand);
            in_copy_[cand] = 1;
            bool done;
            if (closing) {
                VertexList path{su};
                path.insert(path.end(), interior.begin(), interior.end());
                path.push_back(sv);
                auto [a, b] = edges_[k];
                witness_.paths[{a, b}] = path;
                done = connect(k + 1);
                if (!done) witness_.paths.erase({a, b});
            } else {
                done = grow_path(k, su, sv, len, interior);
            }
            if (done) return true;
            in_copy_[cand] = 0;
            interior.pop_back();
        }
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    std::vector<int> chain_pred_;
    VertexList order_;
    std::vector<int> map_;
    std::vector<char> in_copy_;
    EdgeList edges_;
    SubdivisionWitness witness_;
};

} // namespace detail

// Generic detector: any pattern, no symmetry quotient.
inline std::optional<SubdivisionWitness> detect_induced_subdivision(
    const Graph& pattern, const Graph& host, const Guards& guards = default_guards()) {
    check_guard("detect pattern vertex count", pattern.vertex_count(),
                guards.detect_pattern_max_vertices);
    check_guard("detect host vertex count", host.vertex_count(), guards.detect_host_generic);
    detail::SubdivisionSearch search(pattern, host, {});
    auto witness = search.run();
    if (witness) {
        WitnessCheck check = validate_witness(pattern, host, *witness);
        if (!check) throw StructureError("detector produced an invalid witness: " + check.clause);
    }
    return witness;
}

// P(a,b)-specialised detector: quotients the branch enumeration by the
// pattern's role symmetries (the pair swap and the permutations inside the
// A- and B-parts), which the generic path does not attempt.
inline std::optional<SubdivisionWitness> detect_induced_subdivision(
    const PatternPab& pattern, const Graph& host, const Guards& guards = default_guards()) {
    check_guard("detect host vertex count", host.vertex_count(), guards.detect_host_pattern);
    std::vector<VertexList> chains{{1, 2}, pattern.part_a(), pattern.part_b()};
    detail::SubdivisionSearch search(pattern.underlying, host, chains);
    auto witness = search.run();
    if (witness) {
        WitnessCheck check = validate_witness(pattern.underlying, host, *witness);
        if (!check) throw StructureError("detector produced an invalid witness: " + check.clause);
    }
    return witness;
}

// Membership in the hereditary class of graphs with no induced subdivision of
// P(a,a).
inline bool is_member(const Graph& g, int a, const Guards& guards = default_guards()) {
    if (a < 1) throw PreconditionError("is_member: a must be >= 1");
    PatternPab pattern = gen_pattern(a, a);
    return !detect_induced_subdivision(pattern, g, guards).has_value();
}

} // namespace pab
