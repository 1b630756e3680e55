#pragma once

#include <optional>
#include <queue>
#include <string>

#include "pab/graph.hpp"
#include "pab/guards.hpp"
#include "pab/oracles.hpp"

namespace pab {

namespace detail {

// Unit-capacity vertex-split flow network for one (s, t) pair.  Node 2v is
// v_in, node 2v+1 is v_out; the v_in -> v_out arc carries capacity 1, edges
// carry effectively infinite capacity.
class VertexFlow {
public:
    VertexFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t), n_(g.vertex_count()) {
        cap_.assign((std::size_t)4 * n_ * n_, 0);
        for (int v = 0; v < n_; ++v) set_cap(in(v), out(v), 1);
        set_cap(in(s), out(s), big());
        set_cap(in(t), out(t), big());
        for (auto [u, v] : g.edges()) {
            set_cap(out(u), in(v), big());
            set_cap(out(v), in(u), big());
        }
    }

    // augment until max flow or until the flow reaches `cutoff`
    int max_flow(int cutoff) {
        int flow = 0;
        while (flow < cutoff && augment()) ++flow;
        return flow;
    }

    // after a full max_flow run: the vertices whose split arc crosses the
    // minimum cut, i.e. v_in reachable from s_out in the residual, v_out not
    VertexList min_cut_vertices() {
        std::vector<char> reach(2 * n_, 0);
        std::queue<int> q;
        q.push(out(s_));
        reach[out(s_)] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < 2 * n_; ++y)
                if (!reach[y] && cap(x, y) > 0) {
                    reach[y] = 1;
                    q.push(y);
                }
        }
        VertexList cut;
        for (int v = 0; v < n_; ++v)
            if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        return cut;
    }

private:
    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }
    int big() const { return n_ + 1; }
    int cap(int a, int b) const { return cap_[(std::size_t)a * 2 * n_ + b]; }
    void set_cap(int a, int b, int c) { cap_[(std::size_t)a * 2 * n_ + b] = c; }
    void add_cap(int a, int b, int d) { cap_[(std::size_t)a * 2 * n_ + b] += d; }

    bool augment() {
        std::vector<int> prev(2 * n_, -1);
        std::queue<int> q;
        q.push(out(s_));
        prev[out(s_)] = out(s_);
        while (!q.empty() && prev[in(t_)] == -1) {
            int x = q.front();
            q.pop();
            for (int y = 0; y < 2 * n_; ++y)
                if (prev[y] == -1 && cap(x, y) > 0) {
                    prev[y] = x;
                    q.push(y);
                }
        }
        if (prev[in(t_)] == -1) return false;
        for (int y = in(t_); y != out(s_); y = prev[y]) {
            add_cap(prev[y], y, -1);
            add_cap(y, prev[y], 1);
        }
        return true;
    }

    const Graph& g_;
    int s_, t_, n_;
    std::vector<int> cap_;
};

} // namespace detail

// Minimum over non-adjacent pairs of the maximum number of internally
// disjoint paths (Menger).  Complete graphs have no such pair and get n-1.
inline int vertex_connectivity(const Graph& g, const Guards& guards = default_guards()) {
    check_guard("connectivity host vertex count", g.vertex_count(),
                guards.connectivity_max_vertices);
    int n = g.vertex_count();
    if (n == 0) return 0;
    if (is_complete(g)) return n - 1;
    int best = n; // any non-adjacent pair gives at most n-2
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            detail::VertexFlow flow(g, s, t);
            best = std::min(best, flow.max_flow(best));
            if (best == 0) return 0;
        }
    return best;
}

// k-connected in the sense used throughout this library: a complete graph on
// at least k+1 vertices, or a non-complete graph with no cutset of size at
// most k-1.
inline bool is_k_connected(const Graph& g, int k, const Guards& guards = default_guards()) {
    if (is_complete(g)) return g.vertex_count() >= k + 1;
    return vertex_connectivity(g, guards) >= k;
}

// A minimum vertex cut of a non-complete graph; nullopt for complete graphs
// (which have none).
inline std::optional<VertexList> minimum_vertex_cut(const Graph& g,
                                                    const Guards& guards = default_guards()) {
    check_guard("connectivity host vertex count", g.vertex_count(),
                guards.connectivity_max_vertices);
    int n = g.vertex_count();
    if (is_complete(g)) return std::nullopt;
    int best = n;
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            detail::VertexFlow flow(g, s, t);
            int f = flow.max_flow(best);
            if (f < best) {
                best = f;
                best_pair = {s, t};
            }
        }
    detail::VertexFlow flow(g, best_pair.first, best_pair.second);
    flow.max_flow(n);
    return flow.min_cut_vertices();
}

// ---------------------------------------------------------------------------
// Highly connected, highly chromatic subgraph search
// ---------------------------------------------------------------------------

struct KConnectedSearch {
    bool found = false;
    InducedSubgraph subgraph;       // meaningful when found
    int connectivity = 0;           // of the returned subgraph
    int chromatic = 0;              // of the returned subgraph
    std::string failure_reason;     // set when !found
    int best_chromatic_seen = 0;    // best chi among visited candidates
};

// Greedy descent: return the current graph once it is k-connected with
// chi >= k; otherwise split along a minimum cutset and recurse into the
// side (plus cutset) with the largest exact chromatic number.  This is a
// desk-scale constructive strategy, not a completeness guarantee.
inline KConnectedSearch find_k_connected_chromatic(const Graph& g, int k,
                                                   const Guards& guards = default_guards()) {
    KConnectedSearch result;
    VertexList live(g.vertex_count());
    std::iota(live.begin(), live.end(), 0);

    while (true) {
        InducedSubgraph current = induced_subgraph(g, live);
        ColouringCertificate chi = chromatic_number(current.graph, guards);
        result.best_chromatic_seen = std::max(result.best_chromatic_seen, chi.colours_used);
        if (chi.colours_used < k) {
            result.failure_reason = "chromatic number dropped below " + std::to_string(k);
            return result;
        }
        if (is_k_connected(current.graph, k, guards)) {
            result.found = true;
            result.connectivity = is_complete(current.graph)
                                      ? current.graph.vertex_count() - 1
                                      : vertex_connectivity(current.graph, guards);
            result.chromatic = chi.colours_used;
            result.subgraph = std::move(current);
            return result;
        }
        if (is_complete(current.graph)) {
            // complete but too small to be k-connected; nothing to split
            result.failure_reason = "reached a complete graph on fewer than k+1 vertices";
            return result;
        }
        VertexList cut = *minimum_vertex_cut(current.graph, guards);
        std::vector<char> in_cut(current.graph.vertex_count(), 0);
        for (int v : cut) in_cut[v] = 1;
        VertexList rest;
        for (int v = 0; v < current.graph.vertex_count(); ++v)
            if (!in_cut[v]) rest.push_back(v);
        InducedSubgraph remainder = induced_subgraph(current.graph, rest);

        VertexList best_side;
        int best_chi = -1;
        for (const auto& comp : connected_components(remainder.graph)) {
            VertexList side = cut;
            for (int v : comp) side.push_back(remainder.vertices[v]);
            std::sort(side.begin(), side.end());
            InducedSubgraph candidate = induced_subgraph(current.graph, side);
            int c = chromatic_number(candidate.graph, guards).colours_used;
            if (c > best_chi) {
                best_chi = c;
                best_side = side;
            }
        }
        VertexList next;
        for (int v : best_side) next.push_back(current.vertices[v]);
        live = std::move(next);
    }
}

} // namespace pab
